#include "sylvester/number_theory.hpp"

#include <algorithm>
#include <stdexcept>

namespace sylvester {

FactoredInteger factorize(std::int64_t n) {
    if (n <= 0) throw std::invalid_argument("factorize requires a positive integer");
    FactoredInteger out;
    out.value = n;
    for (std::int64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0) continue;
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.factors.push_back({p, e});
    }
    if (n > 1) out.factors.push_back({n, 1});
    return out;
}

std::int64_t euler_phi(std::int64_t n) {
    const FactoredInteger f = factorize(n);
    std::int64_t phi = 1;
    for (const auto& [p, e] : f.factors) {
        std::int64_t pe = 1;
        for (unsigned i = 1; i < e; ++i) pe *= p;
        phi *= pe * (p - 1);
    }
    return phi;
}

int moebius(std::int64_t n) {
    const FactoredInteger f = factorize(n);
    for (const auto& pp : f.factors) {
        if (pp.exponent > 1) return 0;
    }
    return f.factors.size() % 2 == 0 ? 1 : -1;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
    const FactoredInteger f = factorize(n);
    std::vector<std::int64_t> divs{1};
    for (const auto& [p, e] : f.factors) {
        const std::size_t base = divs.size();
        std::int64_t pe = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pe *= p;
            for (std::size_t k = 0; k < base; ++k) divs.push_back(divs[k] * pe);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

std::int64_t prime_circulator(std::int64_t j, std::int64_t s) {
    if (j <= 0) throw std::invalid_argument("prime_circulator requires j >= 1");
    std::int64_t result = 1;
    for (const auto& [p, e] : factorize(j).factors) {
        std::int64_t pe1 = 1;  // p^(e-1)
        for (unsigned i = 1; i < e; ++i) pe1 *= p;
        if (s % pe1 != 0) return 0;
        const std::int64_t s1 = s / pe1;
        result *= pe1 * (s1 % p == 0 ? p - 1 : -1);
    }
    return result;
}

std::int64_t vector_circulator(std::span<const std::int64_t> j, std::span<const std::int64_t> s) {
    if (j.size() != s.size() || j.empty())
        throw std::invalid_argument("vector_circulator requires equal nonempty index and argument");
    std::int64_t result = 1;
    for (std::size_t k = 0; k < j.size(); ++k) {
        result *= prime_circulator(j[k], s[k]);
        if (result == 0) return 0;
    }
    return result;
}

mpz_class factorial(unsigned n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

mpz_class binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

}  // namespace sylvester
