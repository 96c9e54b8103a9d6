#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <vector>

namespace sylvester {

struct PrimePower {
    std::int64_t prime;
    unsigned exponent;
};

/// Prime factorization with primes strictly increasing; 1 factors to an
/// empty list. The product of prime^exponent reconstructs value.
struct FactoredInteger {
    std::int64_t value = 1;
    std::vector<PrimePower> factors;
};

/// Trial-division factorization. Rejects n <= 0.
FactoredInteger factorize(std::int64_t n);

/// Euler totient. Rejects n <= 0.
std::int64_t euler_phi(std::int64_t n);

/// Moebius function: 0 for non-squarefree n, else (-1)^(#prime factors).
int moebius(std::int64_t n);

/// Sorted positive divisors of n. Rejects n <= 0.
std::vector<std::int64_t> divisors(std::int64_t n);

/// Ramanujan sum: the sum of rho^s over the primitive j-th roots of unity,
/// evaluated by the multiplicative closed form. For j = prod p^a,
///   Psi_j(s) = prod p^(a-1) * Psi_p(s / p^(a-1)),
/// where Psi_p(s) is phi(p) when p | s and mu(p) otherwise, and a factor is
/// zero whenever s / p^(a-1) is not an integer. Psi_1(s) = 1. Integer-valued,
/// periodic in s with period j, and even in s. Rejects j <= 0.
std::int64_t prime_circulator(std::int64_t j, std::int64_t s);

/// Componentwise product of prime circulators; j and s must have equal length.
std::int64_t vector_circulator(std::span<const std::int64_t> j, std::span<const std::int64_t> s);

mpz_class factorial(unsigned n);
mpz_class binomial(unsigned n, unsigned k);

}  // namespace sylvester
