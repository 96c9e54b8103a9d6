#include "sylvester/poly_families.hpp"

#include <stdexcept>

namespace sylvester {

namespace {

IntMatrix row_matrix(const HigherOrderSpec& spec) {
    IntMatrix m(1, static_cast<int>(spec.d.size()));
    for (int i = 0; i < m.cols; ++i) {
        if (spec.d[i] < 1) throw std::invalid_argument("higher-order parameters must be >= 1");
        m.at(0, i) = spec.d[i];
    }
    return m;
}

void check_matrix(const IntMatrix& D) {
    if (D.rows < 1) throw std::invalid_argument("parameter matrix needs at least one row");
    for (std::int64_t e : D.entries) {
        if (e < 0) throw std::invalid_argument("parameter matrix entries must be nonnegative");
    }
}

}  // namespace

MultiPoly bernoulli_poly(unsigned k) { return higher_order_bernoulli(k, {{1}}); }

MultiPoly eulerian_poly(unsigned k, const BigRational& rho) {
    const std::vector<BigRational> rhos{rho};
    return higher_order_eulerian(k, rhos, {{1}});
}

MultiPoly higher_order_bernoulli(unsigned k, const HigherOrderSpec& spec) {
    return vector_higher_order_bernoulli(Exponents{k}, {row_matrix(spec)});
}

MultiPoly higher_order_eulerian(unsigned k, std::span<const BigRational> rho,
                                const HigherOrderSpec& spec) {
    return vector_higher_order_eulerian(Exponents{k}, rho, {row_matrix(spec)});
}

MultiPoly vector_bernoulli(const Exponents& k, int x_count) {
    if (static_cast<int>(k.size()) != x_count)
        throw std::invalid_argument("index length must match the variable count");
    IntMatrix ones(x_count, 1);
    for (int r = 0; r < x_count; ++r) ones.at(r, 0) = 1;
    return vector_higher_order_bernoulli(k, {ones});
}

MultiPoly vector_higher_order_bernoulli(const Exponents& n, const VectorHigherOrderSpec& spec,
                                        unsigned cap_override) {
    check_matrix(spec.D);
    if (static_cast<int>(n.size()) != spec.D.rows)
        throw std::invalid_argument("index length must match the matrix row count");
    const unsigned cap = std::max(total_degree(n), cap_override);
    CoeffSeries s = exp_linear_series(spec.D.rows, cap);
    for (int j = 0; j < spec.D.cols; ++j) {
        s = series_multiply(s, linear_form_factor_series({spec.D.column(j)}, spec.D.rows, cap));
    }
    return extract_coefficient(s, n);
}

MultiPoly vector_higher_order_eulerian(const Exponents& n, std::span<const BigRational> rho,
                                       const VectorHigherOrderSpec& spec,
                                       unsigned cap_override) {
    check_matrix(spec.D);
    if (static_cast<int>(n.size()) != spec.D.rows)
        throw std::invalid_argument("index length must match the matrix row count");
    if (static_cast<int>(rho.size()) != spec.D.cols)
        throw std::invalid_argument("need one rho per matrix column");
    const unsigned cap = std::max(total_degree(n), cap_override);
    CoeffSeries s = exp_linear_series(spec.D.rows, cap);
    for (int j = 0; j < spec.D.cols; ++j) {
        s = series_multiply(s,
                            eulerian_factor_series({spec.D.column(j)}, rho[j], spec.D.rows, cap));
    }
    return extract_coefficient(s, n);
}

}  // namespace sylvester
