#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <vector>

#include "sylvester/multipoly.hpp"

namespace sylvester {

/// Integer linear form c . t over the t-variables of a series.
struct LinearForm {
    std::vector<std::int64_t> coefficients;
};

/// Bernoulli numbers B_0..B_kmax from the defining recurrence
/// sum_{i=0}^{k} binom(k+1, i) B_i = 0 (k >= 1), B_0 = 1.
std::vector<BigRational> bernoulli_numbers(unsigned k_max);

/// Formal power series in the t-variables, truncated at a total degree cap,
/// whose coefficients are exact polynomials in a separate x-variable block.
/// Ring operations stay exact up to the cap.
class CoeffSeries {
public:
    CoeffSeries(int t_variable_count, int x_variable_count, unsigned cap);

    static CoeffSeries constant(int t_variable_count, int x_variable_count, unsigned cap,
                                const GaussianRational& value);

    int t_variable_count() const { return t_vars_; }
    int x_variable_count() const { return x_vars_; }
    unsigned cap() const { return cap_; }
    const std::map<Exponents, MultiPoly>& terms() const { return terms_; }

    /// Raw coefficient of t^exponents (zero polynomial if absent).
    MultiPoly coefficient(const Exponents& t_exponents) const;
    void add_term(const Exponents& t_exponents, const MultiPoly& poly);

    CoeffSeries& operator+=(const CoeffSeries& o);
    CoeffSeries& operator-=(const CoeffSeries& o);
    CoeffSeries operator*(const GaussianRational& c) const;

    friend CoeffSeries operator+(CoeffSeries a, const CoeffSeries& b) { return a += b; }
    friend CoeffSeries operator-(CoeffSeries a, const CoeffSeries& b) { return a -= b; }
    friend bool operator==(const CoeffSeries& a, const CoeffSeries& b) {
        return a.t_vars_ == b.t_vars_ && a.x_vars_ == b.x_vars_ && a.cap_ == b.cap_ &&
               a.terms_ == b.terms_;
    }

    /// Multiplicative inverse; the constant term must be a nonzero constant.
    CoeffSeries inverse() const;

    /// Applies fn to every coefficient polynomial (used for x-translations).
    CoeffSeries map_coefficients(const std::function<MultiPoly(const MultiPoly&)>& fn) const;

private:
    int t_vars_;
    int x_vars_;
    unsigned cap_;
    std::map<Exponents, MultiPoly> terms_;  // no zero polynomials stored
};

/// Truncated product; shapes and caps must match.
CoeffSeries series_multiply(const CoeffSeries& a, const CoeffSeries& b);

/// e^(x . t): the coefficient of t^e is the monomial x^e / e!.
CoeffSeries exp_linear_series(int x_count, unsigned cap);

/// u / (e^u - 1) with u = c . t: the series sum_k B_k (c.t)^k / k!.
CoeffSeries linear_form_factor_series(const LinearForm& c, int x_count, unsigned cap);

/// (1 - rho) / (e^(c.t) - rho); rejects rho = 1 (pole).
CoeffSeries eulerian_factor_series(const LinearForm& c, const BigRational& rho, int x_count,
                                   unsigned cap);

/// k! times the raw coefficient of t^k (the generating-function convention).
/// Rejects exponents with total degree beyond the cap.
MultiPoly extract_coefficient(const CoeffSeries& series, const Exponents& t_exponents);

}  // namespace sylvester
