#include "sylvester/series.hpp"

#include <stdexcept>

#include "sylvester/number_theory.hpp"

namespace sylvester {

namespace {

mpz_class exponent_factorial(const Exponents& e) {
    mpz_class r = 1;
    for (unsigned v : e) r *= factorial(v);
    return r;
}

// prod c_i^(e_i) over the linear-form coefficients.
mpz_class coeff_power(const LinearForm& c, const Exponents& e) {
    mpz_class r = 1;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        mpz_class p;
        mpz_class base(static_cast<long>(c.coefficients[i]));
        mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), e[i]);
        r *= p;
    }
    return r;
}

}  // namespace

std::vector<BigRational> bernoulli_numbers(unsigned k_max) {
    std::vector<BigRational> b;
    b.reserve(k_max + 1);
    b.emplace_back(1);
    for (unsigned k = 1; k <= k_max; ++k) {
        BigRational sum(0);
        for (unsigned i = 0; i < k; ++i) sum += BigRational(binomial(k + 1, i), 1) * b[i];
        b.push_back(-sum / BigRational(static_cast<long>(k) + 1));
    }
    return b;
}

CoeffSeries::CoeffSeries(int t_variable_count, int x_variable_count, unsigned cap)
    : t_vars_(t_variable_count), x_vars_(x_variable_count), cap_(cap) {
    if (t_variable_count < 1 || x_variable_count < 0)
        throw std::invalid_argument("invalid series shape");
}

CoeffSeries CoeffSeries::constant(int t_variable_count, int x_variable_count, unsigned cap,
                                  const GaussianRational& value) {
    CoeffSeries s(t_variable_count, x_variable_count, cap);
    s.add_term(Exponents(t_variable_count, 0), MultiPoly::constant(x_variable_count, value));
    return s;
}

MultiPoly CoeffSeries::coefficient(const Exponents& t_exponents) const {
    const auto it = terms_.find(t_exponents);
    return it == terms_.end() ? MultiPoly(x_vars_) : it->second;
}

void CoeffSeries::add_term(const Exponents& t_exponents, const MultiPoly& poly) {
    if (static_cast<int>(t_exponents.size()) != t_vars_)
        throw std::invalid_argument("t-exponent length mismatch");
    if (total_degree(t_exponents) > cap_) return;
    if (poly.variable_count() != x_vars_) throw std::invalid_argument("coefficient shape mismatch");
    if (poly.is_zero()) return;
    auto [it, inserted] = terms_.emplace(t_exponents, poly);
    if (!inserted) {
        it->second += poly;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

CoeffSeries& CoeffSeries::operator+=(const CoeffSeries& o) {
    if (t_vars_ != o.t_vars_ || x_vars_ != o.x_vars_ || cap_ != o.cap_)
        throw std::invalid_argument("series shape mismatch");
    for (const auto& [e, p] : o.terms_) add_term(e, p);
    return *this;
}

CoeffSeries& CoeffSeries::operator-=(const CoeffSeries& o) {
    if (t_vars_ != o.t_vars_ || x_vars_ != o.x_vars_ || cap_ != o.cap_)
        throw std::invalid_argument("series shape mismatch");
    for (const auto& [e, p] : o.terms_) add_term(e, -p);
    return *this;
}

CoeffSeries CoeffSeries::operator*(const GaussianRational& c) const {
    CoeffSeries out(t_vars_, x_vars_, cap_);
    if (c.is_zero()) return out;
    for (const auto& [e, p] : terms_) out.terms_.emplace(e, p * c);
    return out;
}

CoeffSeries series_multiply(const CoeffSeries& a, const CoeffSeries& b) {
    if (a.t_variable_count() != b.t_variable_count() ||
        a.x_variable_count() != b.x_variable_count() || a.cap() != b.cap())
        throw std::invalid_argument("series shape mismatch");
    CoeffSeries out(a.t_variable_count(), a.x_variable_count(), a.cap());
    Exponents sum(a.t_variable_count());
    for (const auto& [ea, pa] : a.terms()) {
        const unsigned da = total_degree(ea);
        for (const auto& [eb, pb] : b.terms()) {
            if (da + total_degree(eb) > a.cap()) continue;
            for (int i = 0; i < a.t_variable_count(); ++i) sum[i] = ea[i] + eb[i];
            out.add_term(sum, pa * pb);
        }
    }
    return out;
}

CoeffSeries CoeffSeries::inverse() const {
    const Exponents zero(t_vars_, 0);
    const MultiPoly c0 = coefficient(zero);
    if (!c0.is_constant() || c0.is_zero())
        throw std::domain_error("series inverse requires a nonzero constant leading term");
    const GaussianRational inv_c0 = GaussianRational(1) / c0.coefficient(Exponents(x_vars_, 0));

    CoeffSeries out(t_vars_, x_vars_, cap_);
    // Graded recursive convolution: c0 * Q_k = delta_{k,0} - sum_{0<e<=k} A_e Q_{k-e}.
    for (const Exponents& k : exponents_up_to(t_vars_, cap_)) {
        MultiPoly acc(x_vars_);
        if (total_degree(k) == 0) {
            acc += MultiPoly::constant(x_vars_, GaussianRational(1));
        } else {
            for (const auto& [e, a_e] : terms_) {
                if (total_degree(e) == 0) continue;
                bool fits = true;
                Exponents rest(t_vars_);
                for (int i = 0; i < t_vars_; ++i) {
                    if (e[i] > k[i]) {
                        fits = false;
                        break;
                    }
                    rest[i] = k[i] - e[i];
                }
                if (!fits) continue;
                const auto it = out.terms_.find(rest);
                if (it == out.terms_.end()) continue;
                acc -= a_e * it->second;
            }
        }
        if (!acc.is_zero()) out.terms_.emplace(k, acc * inv_c0);
    }
    return out;
}

CoeffSeries CoeffSeries::map_coefficients(
    const std::function<MultiPoly(const MultiPoly&)>& fn) const {
    CoeffSeries out(t_vars_, x_vars_, cap_);
    for (const auto& [e, p] : terms_) out.add_term(e, fn(p));
    return out;
}

CoeffSeries exp_linear_series(int x_count, unsigned cap) {
    CoeffSeries s(x_count, x_count, cap);
    for (const Exponents& e : exponents_up_to(x_count, cap)) {
        s.add_term(e, MultiPoly::monomial(x_count, e,
                                          GaussianRational(BigRational(1, exponent_factorial(e)))));
    }
    return s;
}

CoeffSeries linear_form_factor_series(const LinearForm& c, int x_count, unsigned cap) {
    const int t_vars = static_cast<int>(c.coefficients.size());
    CoeffSeries s(t_vars, x_count, cap);
    const std::vector<BigRational> bern = bernoulli_numbers(cap);
    for (const Exponents& e : exponents_up_to(t_vars, cap)) {
        const mpz_class cp = coeff_power(c, e);
        if (cp == 0) continue;
        // B_k * prod c^e / e!  with k = |e|.
        const BigRational coeff =
            bern[total_degree(e)] * BigRational(cp, exponent_factorial(e));
        s.add_term(e, MultiPoly::constant(x_count, GaussianRational(coeff)));
    }
    return s;
}

CoeffSeries eulerian_factor_series(const LinearForm& c, const BigRational& rho, int x_count,
                                   unsigned cap) {
    if (rho == BigRational(1)) throw std::domain_error("rho must not equal 1");
    const int t_vars = static_cast<int>(c.coefficients.size());
    // e^(c.t) - rho, then invert and scale by (1 - rho).
    CoeffSeries denom(t_vars, x_count, cap);
    for (const Exponents& e : exponents_up_to(t_vars, cap)) {
        const mpz_class cp = coeff_power(c, e);
        if (cp == 0) continue;
        denom.add_term(e, MultiPoly::constant(
                              x_count, GaussianRational(BigRational(cp, exponent_factorial(e)))));
    }
    denom.add_term(Exponents(t_vars, 0), MultiPoly::constant(x_count, GaussianRational(-rho)));
    return denom.inverse() * GaussianRational(BigRational(1) - rho);
}

MultiPoly extract_coefficient(const CoeffSeries& series, const Exponents& t_exponents) {
    if (total_degree(t_exponents) > series.cap())
        throw std::invalid_argument("requested coefficient lies beyond the series cap");
    return series.coefficient(t_exponents) *
           GaussianRational(BigRational(exponent_factorial(t_exponents), 1));
}

}  // namespace sylvester
