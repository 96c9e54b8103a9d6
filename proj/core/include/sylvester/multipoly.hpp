#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "sylvester/rational.hpp"

namespace sylvester {

using Exponents = std::vector<unsigned>;

unsigned total_degree(const Exponents& e);

/// All exponent vectors of the given length with total degree <= cap,
/// in graded lexicographic order.
std::vector<Exponents> exponents_up_to(int variable_count, unsigned cap);

/// All exponent vectors of the given length with total degree == degree,
/// in lexicographic order.
std::vector<Exponents> exponents_of_degree(int variable_count, unsigned degree);

/// Multivariate polynomial with exact Gaussian-rational coefficients.
/// Terms are kept keyed by exponent vector in lexicographic order and zero
/// coefficients are never stored.
class MultiPoly {
public:
    explicit MultiPoly(int variable_count);

    static MultiPoly constant(int variable_count, GaussianRational value);
    static MultiPoly variable(int variable_count, int index);
    static MultiPoly monomial(int variable_count, Exponents exponents, GaussianRational coeff);

    int variable_count() const { return variable_count_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool has_real_coefficients() const;
    unsigned degree() const;  // total degree; 0 for the zero polynomial
    GaussianRational coefficient(const Exponents& exponents) const;
    const std::map<Exponents, GaussianRational>& terms() const { return terms_; }

    void add_term(const Exponents& exponents, const GaussianRational& coeff);

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator*(const GaussianRational& c) const;
    MultiPoly pow(unsigned exponent) const;

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.variable_count_ == b.variable_count_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    GaussianRational evaluate(std::span<const GaussianRational> point) const;
    BigRational evaluate_real(std::span<const BigRational> point) const;

    /// Substitutes images[i] for variable i; all images share one variable set.
    MultiPoly compose(std::span<const MultiPoly> images) const;
    /// x_i -> x_i + offset_i.
    MultiPoly shifted(std::span<const BigRational> offsets) const;
    /// x_i -> factor_i * x_i.
    MultiPoly scaled(std::span<const BigRational> factors) const;
    /// Maps variable i of this polynomial to variable_map[i] in a wider space.
    MultiPoly embedded(int new_variable_count, std::span<const int> variable_map) const;

    /// Human-readable form, terms in decreasing total degree:
    /// "x^2 - x + 1/6". Uses `base` for one variable, base1..baseN otherwise.
    std::string str(const std::string& base = "x") const;
    std::string str(std::span<const std::string> names) const;

private:
    int variable_count_;
    std::map<Exponents, GaussianRational> terms_;
};

}  // namespace sylvester
