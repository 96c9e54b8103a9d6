#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sylvester/intmatrix.hpp"
#include "sylvester/multipoly.hpp"
#include "sylvester/series.hpp"

namespace sylvester {

/// Parameter list d^m for the higher-order families; empty means the
/// generating-function product is empty and the polynomial is x^k.
struct HigherOrderSpec {
    std::vector<std::int64_t> d;
};

/// l x m nonnegative parameter matrix D for the vector families of higher
/// order; column j supplies the linear form c_j . t of one factor.
struct VectorHigherOrderSpec {
    IntMatrix D;
};

/// B_k(x): e^(xt) t/(e^t - 1) = sum B_k(x) t^k / k!.
MultiPoly bernoulli_poly(unsigned k);

/// H_k(x, rho): e^(xt) (1-rho)/(e^t - rho); rho = -1 gives Euler polynomials.
MultiPoly eulerian_poly(unsigned k, const BigRational& rho);

/// B^(m)_k(x | d): e^(xt) prod_i d_i t/(e^(d_i t) - 1).
MultiPoly higher_order_bernoulli(unsigned k, const HigherOrderSpec& spec);

/// H^(m)_k(x, rho | d): e^(xt) prod_i (1-rho_i)/(e^(d_i t) - rho_i).
MultiPoly higher_order_eulerian(unsigned k, std::span<const BigRational> rho,
                                const HigherOrderSpec& spec);

/// B_k(x) of vector index and argument:
/// e^(x.t) (sum t_i)/(e^(sum t_i) - 1), a polynomial in x_1..x_l.
MultiPoly vector_bernoulli(const Exponents& k, int x_count);

/// B^(l,m)_n(x | D): e^(x.t) prod_j (c_j.t)/(e^(c_j.t) - 1) over the columns
/// of D. cap_override >= |n| widens the internal truncation (same result).
MultiPoly vector_higher_order_bernoulli(const Exponents& n, const VectorHigherOrderSpec& spec,
                                        unsigned cap_override = 0);

/// H^(l,m)_n(x, rho | D): e^(x.t) prod_j (1-rho_j)/(e^(c_j.t) - rho_j).
MultiPoly vector_higher_order_eulerian(const Exponents& n, std::span<const BigRational> rho,
                                       const VectorHigherOrderSpec& spec,
                                       unsigned cap_override = 0);

}  // namespace sylvester
