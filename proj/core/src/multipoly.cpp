#include "sylvester/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "sylvester/number_theory.hpp"

namespace sylvester {

unsigned total_degree(const Exponents& e) {
    return std::accumulate(e.begin(), e.end(), 0U);
}

namespace {

void enumerate_rec(int vars, unsigned remaining, bool exact, Exponents& current,
                   std::vector<Exponents>& out) {
    if (static_cast<int>(current.size()) == vars) {
        if (!exact || remaining == 0) out.push_back(current);
        return;
    }
    const bool last = static_cast<int>(current.size()) == vars - 1;
    for (unsigned e = 0; e <= remaining; ++e) {
        if (exact && last && e != remaining) continue;
        current.push_back(e);
        enumerate_rec(vars, remaining - e, exact, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<Exponents> exponents_up_to(int variable_count, unsigned cap) {
    std::vector<Exponents> out;
    for (unsigned d = 0; d <= cap; ++d) {
        Exponents current;
        enumerate_rec(variable_count, d, true, current, out);
    }
    return out;
}

std::vector<Exponents> exponents_of_degree(int variable_count, unsigned degree) {
    std::vector<Exponents> out;
    Exponents current;
    enumerate_rec(variable_count, degree, true, current, out);
    return out;
}

MultiPoly::MultiPoly(int variable_count) : variable_count_(variable_count) {
    if (variable_count < 0) throw std::invalid_argument("negative variable count");
}

MultiPoly MultiPoly::constant(int variable_count, GaussianRational value) {
    MultiPoly p(variable_count);
    p.add_term(Exponents(variable_count, 0), value);
    return p;
}

MultiPoly MultiPoly::variable(int variable_count, int index) {
    if (index < 0 || index >= variable_count) throw std::invalid_argument("variable index out of range");
    Exponents e(variable_count, 0);
    e[index] = 1;
    return monomial(variable_count, std::move(e), GaussianRational(1));
}

MultiPoly MultiPoly::monomial(int variable_count, Exponents exponents, GaussianRational coeff) {
    if (static_cast<int>(exponents.size()) != variable_count)
        throw std::invalid_argument("exponent vector length mismatch");
    MultiPoly p(variable_count);
    p.add_term(exponents, coeff);
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

bool MultiPoly::has_real_coefficients() const {
    for (const auto& [e, c] : terms_) {
        if (!c.is_real()) return false;
    }
    return true;
}

unsigned MultiPoly::degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d;
}

GaussianRational MultiPoly::coefficient(const Exponents& exponents) const {
    const auto it = terms_.find(exponents);
    return it == terms_.end() ? GaussianRational(0) : it->second;
}

void MultiPoly::add_term(const Exponents& exponents, const GaussianRational& coeff) {
    if (static_cast<int>(exponents.size()) != variable_count_)
        throw std::invalid_argument("exponent vector length mismatch");
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.emplace(exponents, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly p(variable_count_);
    for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
    return p;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (variable_count_ != o.variable_count_) throw std::invalid_argument("variable count mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    if (variable_count_ != o.variable_count_) throw std::invalid_argument("variable count mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    if (variable_count_ != o.variable_count_) throw std::invalid_argument("variable count mismatch");
    MultiPoly p(variable_count_);
    Exponents sum(variable_count_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (int i = 0; i < variable_count_; ++i) sum[i] = ea[i] + eb[i];
            p.add_term(sum, ca * cb);
        }
    }
    return p;
}

MultiPoly MultiPoly::operator*(const GaussianRational& c) const {
    MultiPoly p(variable_count_);
    if (c.is_zero()) return p;
    for (const auto& [e, t] : terms_) p.terms_.emplace(e, t * c);
    return p;
}

MultiPoly MultiPoly::pow(unsigned exponent) const {
    MultiPoly result = constant(variable_count_, GaussianRational(1));
    for (unsigned i = 0; i < exponent; ++i) result = result * *this;
    return result;
}

GaussianRational MultiPoly::evaluate(std::span<const GaussianRational> point) const {
    if (static_cast<int>(point.size()) != variable_count_)
        throw std::invalid_argument("evaluation point length mismatch");
    GaussianRational sum(0);
    for (const auto& [e, c] : terms_) {
        GaussianRational term = c;
        for (int i = 0; i < variable_count_; ++i) {
            if (e[i] > 0) term *= sylvester::pow(point[i], e[i]);
        }
        sum += term;
    }
    return sum;
}

BigRational MultiPoly::evaluate_real(std::span<const BigRational> point) const {
    std::vector<GaussianRational> z(point.begin(), point.end());
    const GaussianRational v = evaluate(z);
    if (!v.is_real()) throw std::domain_error("polynomial value is not real");
    return v.real();
}

MultiPoly MultiPoly::compose(std::span<const MultiPoly> images) const {
    if (static_cast<int>(images.size()) != variable_count_)
        throw std::invalid_argument("compose needs one image per variable");
    const int out_vars = images.empty() ? 0 : images[0].variable_count();
    for (const MultiPoly& img : images) {
        if (img.variable_count() != out_vars) throw std::invalid_argument("image variable counts differ");
    }
    MultiPoly result(out_vars);
    for (const auto& [e, c] : terms_) {
        MultiPoly term = MultiPoly::constant(out_vars, c);
        for (int i = 0; i < variable_count_; ++i) {
            if (e[i] > 0) term = term * images[i].pow(e[i]);
        }
        result += term;
    }
    return result;
}

MultiPoly MultiPoly::shifted(std::span<const BigRational> offsets) const {
    if (static_cast<int>(offsets.size()) != variable_count_)
        throw std::invalid_argument("shift offset length mismatch");
    MultiPoly result(variable_count_);
    Exponents target(variable_count_);
    for (const auto& [e, c] : terms_) {
        // Expand prod_i (x_i + offset_i)^(e_i) term by term.
        std::vector<std::vector<GaussianRational>> var_coeffs(variable_count_);
        for (int i = 0; i < variable_count_; ++i) {
            var_coeffs[i].resize(e[i] + 1);
            for (unsigned t = 0; t <= e[i]; ++t) {
                var_coeffs[i][t] = GaussianRational(
                    BigRational(binomial(e[i], t), 1) * sylvester::pow(offsets[i], e[i] - t));
            }
        }
        // Odometer over the choices of retained powers per variable.
        Exponents pick(variable_count_, 0);
        while (true) {
            GaussianRational coeff = c;
            for (int i = 0; i < variable_count_; ++i) {
                coeff *= var_coeffs[i][pick[i]];
                target[i] = pick[i];
            }
            result.add_term(target, coeff);
            int i = variable_count_ - 1;
            while (i >= 0 && pick[i] == e[i]) pick[i--] = 0;
            if (i < 0) break;
            ++pick[i];
        }
    }
    return result;
}

MultiPoly MultiPoly::scaled(std::span<const BigRational> factors) const {
    if (static_cast<int>(factors.size()) != variable_count_)
        throw std::invalid_argument("scale factor length mismatch");
    MultiPoly result(variable_count_);
    for (const auto& [e, c] : terms_) {
        GaussianRational coeff = c;
        for (int i = 0; i < variable_count_; ++i) {
            if (e[i] > 0) coeff *= GaussianRational(sylvester::pow(factors[i], e[i]));
        }
        result.add_term(e, coeff);
    }
    return result;
}

MultiPoly MultiPoly::embedded(int new_variable_count, std::span<const int> variable_map) const {
    if (static_cast<int>(variable_map.size()) != variable_count_)
        throw std::invalid_argument("variable map length mismatch");
    MultiPoly result(new_variable_count);
    for (const auto& [e, c] : terms_) {
        Exponents ne(new_variable_count, 0);
        for (int i = 0; i < variable_count_; ++i) {
            if (variable_map[i] < 0 || variable_map[i] >= new_variable_count)
                throw std::invalid_argument("variable map index out of range");
            ne[variable_map[i]] += e[i];
        }
        result.add_term(ne, c);
    }
    return result;
}

std::string MultiPoly::str(const std::string& base) const {
    if (variable_count_ <= 1) {
        std::vector<std::string> names{base};
        return str(names);
    }
    std::vector<std::string> names;
    names.reserve(variable_count_);
    for (int i = 0; i < variable_count_; ++i) names.push_back(base + std::to_string(i + 1));
    return str(names);
}

std::string MultiPoly::str(std::span<const std::string> names) const {
    if (static_cast<int>(names.size()) < variable_count_)
        throw std::invalid_argument("not enough variable names");
    if (terms_.empty()) return "0";

    std::vector<const std::pair<const Exponents, GaussianRational>*> order;
    order.reserve(terms_.size());
    for (const auto& t : terms_) order.push_back(&t);
    std::sort(order.begin(), order.end(), [](const auto* a, const auto* b) {
        const unsigned da = total_degree(a->first), db = total_degree(b->first);
        if (da != db) return da > db;
        return a->first > b->first;
    });

    std::string out;
    for (const auto* term : order) {
        const auto& [e, c] = *term;
        std::string mono;
        for (int i = 0; i < variable_count_; ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += names[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }

        bool negative = false;
        std::string coeff;
        if (c.is_real()) {
            negative = c.real().is_negative();
            const BigRational mag = negative ? -c.real() : c.real();
            if (mono.empty() || mag != BigRational(1)) coeff = mag.str();
        } else {
            coeff = "(" + c.str() + ")";
        }

        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        if (!coeff.empty() && !mono.empty()) {
            out += coeff + "*" + mono;
        } else {
            out += coeff + mono;
        }
    }
    return out;
}

}  // namespace sylvester
