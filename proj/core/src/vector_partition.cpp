#include "sylvester/vector_partition.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "sylvester/number_theory.hpp"
#include "sylvester/poly_families.hpp"

namespace sylvester {

namespace {

int rational_rank(const IntMatrix& D) {
    std::vector<std::vector<BigRational>> a(D.rows, std::vector<BigRational>(D.cols));
    for (int r = 0; r < D.rows; ++r) {
        for (int c = 0; c < D.cols; ++c) a[r][c] = BigRational(static_cast<long>(D.at(r, c)));
    }
    int rank = 0;
    for (int col = 0; col < D.cols && rank < D.rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < D.rows; ++r) {
            if (!a[r][col].is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(a[rank], a[pivot]);
        for (int r = rank + 1; r < D.rows; ++r) {
            if (a[r][col].is_zero()) continue;
            const BigRational f = a[r][col] / a[rank][col];
            for (int c = col; c < D.cols; ++c) a[r][c] -= f * a[rank][c];
        }
        ++rank;
    }
    return rank;
}

std::vector<BigRational> to_rational(std::span<const std::int64_t> v) {
    std::vector<BigRational> out;
    out.reserve(v.size());
    for (std::int64_t x : v) out.emplace_back(static_cast<long>(x));
    return out;
}

// Dense polynomial in one formal perturbation variable, used for the
// projective-limit evaluation.
using EpsPoly = std::vector<GaussianRational>;

EpsPoly eps_mul(const EpsPoly& a, const EpsPoly& b) {
    EpsPoly out(a.size() + b.size() - 1, GaussianRational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t k = 0; k < b.size(); ++k) out[i + k] += a[i] * b[k];
    }
    return out;
}

EpsPoly eps_pow(const EpsPoly& a, unsigned e) {
    EpsPoly out{GaussianRational(1)};
    for (unsigned i = 0; i < e; ++i) out = eps_mul(out, a);
    return out;
}

std::optional<std::size_t> lowest_nonzero(const EpsPoly& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (!p[i].is_zero()) return i;
    }
    return std::nullopt;
}

}  // namespace

MatrixSpec MatrixSpec::validate(IntMatrix D) {
    if (D.rows < 1 || D.cols < 1) throw std::invalid_argument("matrix must be nonempty");
    for (std::int64_t e : D.entries) {
        if (e < 0) throw std::invalid_argument("matrix entries must be nonnegative");
    }
    if (D.cols < D.rows)
        throw std::invalid_argument("matrix must have at least as many columns as rows (got " +
                                    std::to_string(D.cols) + " < " + std::to_string(D.rows) + ")");
    for (int c = 0; c < D.cols; ++c) {
        bool all_zero = true;
        for (int r = 0; r < D.rows; ++r) {
            if (D.at(r, c) != 0) {
                all_zero = false;
                break;
            }
        }
        if (all_zero)
            throw std::invalid_argument("matrix column " + std::to_string(c + 1) + " is all zero");
    }
    const int rank = rational_rank(D);
    if (rank < D.rows)
        throw std::invalid_argument(
            "matrix rank " + std::to_string(rank) + " < rows " + std::to_string(D.rows) +
            "; row-degenerate systems must be reduced to full row rank (with the induced "
            "divisibility conditions on s) before decomposition");
    return MatrixSpec(std::move(D));
}

std::vector<std::int64_t> MatrixSpec::sigma() const {
    std::vector<std::int64_t> out(D_.rows, 0);
    for (int r = 0; r < D_.rows; ++r) {
        for (int c = 0; c < D_.cols; ++c) out[r] += D_.at(r, c);
    }
    return out;
}

std::uint64_t brute_vector_count(std::span<const std::int64_t> s, const MatrixSpec& D) {
    if (static_cast<int>(s.size()) != D.rows())
        throw std::invalid_argument("target vector length must match the matrix row count");
    for (std::int64_t v : s) {
        if (v < 0) throw std::invalid_argument("count argument must be nonnegative");
    }
    std::vector<std::int64_t> rest(s.begin(), s.end());
    std::uint64_t count = 0;
    // Depth-first over columns; every column has a positive entry, so the
    // per-column bound floor(rest_k / D_ki) is finite.
    auto recurse = [&](auto&& self, int col) -> void {
        if (col == D.cols()) {
            for (std::int64_t v : rest) {
                if (v != 0) return;
            }
            ++count;
            return;
        }
        std::int64_t bound = std::numeric_limits<std::int64_t>::max();
        for (int r = 0; r < D.rows(); ++r) {
            const std::int64_t entry = D.matrix().at(r, col);
            if (entry > 0) bound = std::min(bound, rest[r] / entry);
        }
        for (std::int64_t x = 0; x <= bound; ++x) {
            if (x > 0) {
                for (int r = 0; r < D.rows(); ++r) rest[r] -= D.matrix().at(r, col);
            }
            self(self, col + 1);
        }
        for (int r = 0; r < D.rows(); ++r) rest[r] += bound * D.matrix().at(r, col);
    };
    recurse(recurse, 0);
    return count;
}

std::vector<std::vector<std::int64_t>> enumerate_j(const MatrixSpec& D) {
    std::set<std::int64_t> divisor_set;
    for (std::int64_t e : D.matrix().entries) {
        if (e > 0) {
            for (std::int64_t f : divisors(e)) divisor_set.insert(f);
        }
    }
    const std::vector<std::int64_t> base(divisor_set.begin(), divisor_set.end());
    std::vector<std::vector<std::int64_t>> out;
    std::vector<std::size_t> idx(D.rows(), 0);
    while (true) {
        std::vector<std::int64_t> j(D.rows());
        for (int k = 0; k < D.rows(); ++k) j[k] = base[idx[k]];
        out.push_back(std::move(j));
        int k = D.rows();
        while (k > 0 && idx[k - 1] + 1 == base.size()) idx[--k] = 0;
        if (k == 0) break;
        ++idx[k - 1];
    }
    return out;
}

JClassification classify_columns(const MatrixSpec& D, std::span<const std::int64_t> j) {
    if (static_cast<int>(j.size()) != D.rows())
        throw std::invalid_argument("period vector length must match the matrix row count");
    for (std::int64_t v : j) {
        if (v < 1) throw std::invalid_argument("period components must be >= 1");
    }
    JClassification cls;
    cls.j.assign(j.begin(), j.end());
    for (int c = 0; c < D.cols(); ++c) {
        bool divisible = true;
        for (int r = 0; r < D.rows(); ++r) {
            if (D.matrix().at(r, c) % j[r] != 0) {
                divisible = false;
                break;
            }
        }
        if (divisible) {
            cls.divisible_columns.push_back(c);
            continue;
        }
        // Minimal p with j_k | p * D_kc for every row.
        std::int64_t p = 1;
        for (int r = 0; r < D.rows(); ++r) {
            p = std::lcm(p, j[r] / std::gcd(j[r], D.matrix().at(r, c)));
        }
        cls.nondivisible_columns.push_back(c);
        cls.periods.push_back(p);
    }
    cls.omega = static_cast<int>(cls.divisible_columns.size());
    return cls;
}

MatrixSpec j_modified_matrix(const MatrixSpec& D, const JClassification& cls) {
    std::vector<std::vector<std::int64_t>> columns;
    columns.reserve(D.cols());
    for (int c : cls.divisible_columns) columns.push_back(D.column(c));
    for (std::size_t i = 0; i < cls.nondivisible_columns.size(); ++i) {
        std::vector<std::int64_t> col = D.column(cls.nondivisible_columns[i]);
        for (std::int64_t& v : col) v *= cls.periods[i];
        columns.push_back(std::move(col));
    }
    return MatrixSpec::validate(IntMatrix::from_columns(D.rows(), columns));
}

MatrixSpec j_modified_matrix(const MatrixSpec& D, std::span<const std::int64_t> j) {
    return j_modified_matrix(D, classify_columns(D, j));
}

MultiPoly homogeneous_poly(const MatrixSpec& D) {
    MultiPoly p = MultiPoly::constant(D.rows(), GaussianRational(1));
    for (int c = 0; c < D.cols(); ++c) {
        MultiPoly form(D.rows());
        for (int r = 0; r < D.rows(); ++r) {
            if (D.matrix().at(r, c) != 0) {
                form += MultiPoly::variable(D.rows(), r) *
                        GaussianRational(BigRational(static_cast<long>(D.matrix().at(r, c))));
            }
        }
        p = p * form;
    }
    return p;
}

GaussianRational coefficient_C(const Exponents& n, std::span<const GaussianRational> alpha,
                               const MatrixSpec& D) {
    if (static_cast<int>(n.size()) != D.rows() || static_cast<int>(alpha.size()) != D.rows())
        throw std::invalid_argument("index and alpha must match the matrix row count");
    if (static_cast<int>(total_degree(n)) != D.cols() - D.rows())
        throw std::invalid_argument("partial wave index must sum to cols - rows");
    const GaussianRational p = homogeneous_poly(D).evaluate(alpha);
    if (p.is_zero())
        throw std::domain_error("alpha lies on the zero set of the chamber polynomial P_m");
    GaussianRational num(1);
    mpz_class nfact = 1;
    for (int i = 0; i < D.rows(); ++i) {
        num *= pow(alpha[i], n[i] + 1UL);
        nfact *= factorial(n[i]);
    }
    return num / (GaussianRational(BigRational(nfact, 1)) * p);
}

MultiPoly partial_poly_part(const Exponents& n, const MatrixSpec& D) {
    if (static_cast<int>(total_degree(n)) != D.cols() - D.rows())
        throw std::invalid_argument("partial wave index must sum to cols - rows");
    const MultiPoly b = vector_higher_order_bernoulli(n, {D.matrix()});
    return b.shifted(to_rational(D.sigma()));
}

std::vector<VectorWaveTerm> partial_wave(const Exponents& n, std::span<const std::int64_t> j,
                                         const MatrixSpec& D) {
    if (static_cast<int>(total_degree(n)) != D.cols() - D.rows())
        throw std::invalid_argument("partial wave index must sum to cols - rows");
    const JClassification cls = classify_columns(D, j);
    const MatrixSpec modified = j_modified_matrix(D, cls);
    const MultiPoly base = vector_higher_order_bernoulli(n, {modified.matrix()});
    const std::vector<std::int64_t> sigma_mod = modified.sigma();

    mpz_class pi_p = 1;
    for (std::int64_t p : cls.periods) pi_p *= static_cast<long>(p);
    const BigRational weight(mpz_class(1), pi_p);

    std::map<std::vector<std::int64_t>, MultiPoly> by_shift;
    std::vector<std::int64_t> r(cls.periods.size(), 0);
    while (true) {
        // Shift r . D over the original non-divisible columns.
        std::vector<std::int64_t> shift(D.rows(), 0);
        for (std::size_t i = 0; i < r.size(); ++i) {
            const auto col = D.column(cls.nondivisible_columns[i]);
            for (int k = 0; k < D.rows(); ++k) shift[k] += r[i] * col[k];
        }
        std::vector<BigRational> offset(D.rows());
        for (int k = 0; k < D.rows(); ++k) offset[k] = BigRational(sigma_mod[k] - shift[k]);
        MultiPoly poly = base.shifted(offset);
        auto it = by_shift.find(shift);
        if (it == by_shift.end()) {
            by_shift.emplace(std::move(shift), std::move(poly));
        } else {
            it->second += poly;
        }

        std::size_t i = r.size();
        while (i > 0 && r[i - 1] + 1 == cls.periods[i - 1]) r[--i] = 0;
        if (i == 0) break;
        ++r[i - 1];
    }

    std::vector<VectorWaveTerm> terms;
    for (auto& [shift, poly] : by_shift) {
        if (!poly.is_zero()) terms.push_back({shift, weight, std::move(poly)});
    }
    return terms;
}

VectorWaveDecomposition::VectorWaveDecomposition(MatrixSpec D)
    : D_(std::move(D)), p_m_(homogeneous_poly(D_)) {
    indices_ = exponents_of_degree(D_.rows(), static_cast<unsigned>(D_.cols() - D_.rows()));
    for (const Exponents& n : indices_) {
        for (const std::vector<std::int64_t>& j : enumerate_j(D_)) {
            std::vector<VectorWaveTerm> terms = partial_wave(n, j, D_);
            if (!terms.empty()) waves_.push_back({n, j, std::move(terms)});
        }
    }
}

VectorWaveDecomposition decompose(const MatrixSpec& D) { return VectorWaveDecomposition(D); }

std::vector<const PartialWave*> VectorWaveDecomposition::waves_for(const Exponents& n) const {
    std::vector<const PartialWave*> out;
    for (const PartialWave& w : waves_) {
        if (w.n == n) out.push_back(&w);
    }
    return out;
}

BigRational VectorWaveDecomposition::partial_wave_value(const Exponents& n,
                                                        std::span<const std::int64_t> s) const {
    BigRational sum(0);
    const std::vector<BigRational> point = to_rational(s);
    std::vector<std::int64_t> arg(D_.rows());
    for (const PartialWave& w : waves_) {
        if (w.n != n) continue;
        for (const VectorWaveTerm& t : w.terms) {
            for (int k = 0; k < D_.rows(); ++k) arg[k] = s[k] - t.shift[k];
            const std::int64_t psi = vector_circulator(w.j, arg);
            if (psi == 0) continue;
            sum += t.weight * t.poly.evaluate_real(point) * BigRational(psi);
        }
    }
    return sum;
}

GaussianRational evaluate(const VectorWaveDecomposition& decomp, std::span<const std::int64_t> s,
                          std::span<const GaussianRational> alpha, const EvalOptions& opts) {
    const int l = decomp.rows();
    if (static_cast<int>(s.size()) != l || static_cast<int>(alpha.size()) != l)
        throw std::invalid_argument("point and alpha must match the matrix row count");

    std::vector<BigRational> wave_values;
    wave_values.reserve(decomp.partial_wave_indices().size());
    for (const Exponents& n : decomp.partial_wave_indices())
        wave_values.push_back(decomp.partial_wave_value(n, s));

    const GaussianRational p_at_alpha = decomp.chamber_polynomial().evaluate(alpha);
    if (!opts.projective_limit) {
        if (p_at_alpha.is_zero())
            throw std::domain_error(
                "alpha lies on the zero set of the chamber polynomial P_m; "
                "pass a perturbation direction for a projective-limit evaluation");
        GaussianRational sum(0);
        for (std::size_t i = 0; i < wave_values.size(); ++i) {
            const Exponents& n = decomp.partial_wave_indices()[i];
            GaussianRational num(1);
            mpz_class nfact = 1;
            for (int k = 0; k < l; ++k) {
                num *= pow(alpha[k], n[k] + 1UL);
                nfact *= factorial(n[k]);
            }
            sum += num * GaussianRational(wave_values[i] / BigRational(nfact, 1)) / p_at_alpha;
        }
        return sum;
    }

    // Projective limit along alpha(eps) = alpha + eps * direction: the value
    // is the ratio of the leading eps-coefficients of numerator and
    // denominator.
    std::vector<BigRational> dir = opts.direction;
    if (dir.empty()) dir.assign(l, BigRational(1));
    if (static_cast<int>(dir.size()) != l)
        throw std::invalid_argument("perturbation direction length must match the row count");

    std::vector<EpsPoly> alpha_eps(l);
    for (int k = 0; k < l; ++k) alpha_eps[k] = {alpha[k], GaussianRational(dir[k])};

    EpsPoly numerator{GaussianRational(0)};
    for (std::size_t i = 0; i < wave_values.size(); ++i) {
        const Exponents& n = decomp.partial_wave_indices()[i];
        EpsPoly term{GaussianRational(1)};
        mpz_class nfact = 1;
        for (int k = 0; k < l; ++k) {
            term = eps_mul(term, eps_pow(alpha_eps[k], n[k] + 1));
            nfact *= factorial(n[k]);
        }
        const GaussianRational scale(wave_values[i] / BigRational(nfact, 1));
        if (numerator.size() < term.size()) numerator.resize(term.size(), GaussianRational(0));
        for (std::size_t d = 0; d < term.size(); ++d) numerator[d] += term[d] * scale;
    }

    EpsPoly denominator{GaussianRational(1)};
    for (int c = 0; c < decomp.cols(); ++c) {
        const auto col = decomp.matrix_spec().column(c);
        EpsPoly form{GaussianRational(0), GaussianRational(0)};
        for (int k = 0; k < l; ++k) {
            const GaussianRational entry(BigRational(static_cast<long>(col[k])));
            form[0] += entry * alpha[k];
            form[1] += entry * GaussianRational(dir[k]);
        }
        denominator = eps_mul(denominator, form);
    }

    const auto ord_den = lowest_nonzero(denominator);
    if (!ord_den)
        throw std::domain_error("degenerate perturbation direction: P_m vanishes along it");
    const auto ord_num = lowest_nonzero(numerator);
    if (!ord_num) return GaussianRational(0);
    if (*ord_num < *ord_den)
        throw std::domain_error("projective limit diverges along the given direction");
    if (*ord_num > *ord_den) return GaussianRational(0);
    return numerator[*ord_num] / denominator[*ord_den];
}

BigRational evaluate_real(const VectorWaveDecomposition& decomp, std::span<const std::int64_t> s,
                          std::span<const GaussianRational> alpha, const EvalOptions& opts) {
    return evaluate(decomp, s, alpha, opts).real();
}

ResidueFormVec residue_form(std::span<const PartialWave> waves, int rows) {
    ResidueFormVec out;
    out.period.assign(rows, 1);
    for (const PartialWave& w : waves) {
        for (int k = 0; k < rows; ++k) out.period[k] = std::lcm(out.period[k], w.j[k]);
    }
    std::vector<std::int64_t> u(rows, 0);
    std::vector<std::int64_t> arg(rows);
    while (true) {
        MultiPoly acc(rows);
        for (const PartialWave& w : waves) {
            for (const VectorWaveTerm& t : w.terms) {
                for (int k = 0; k < rows; ++k) arg[k] = u[k] - t.shift[k];
                const std::int64_t psi = vector_circulator(w.j, arg);
                if (psi == 0) continue;
                acc += t.poly * GaussianRational(t.weight * BigRational(psi));
            }
        }
        out.polys.emplace(u, std::move(acc));
        int k = rows;
        while (k > 0 && u[k - 1] + 1 == out.period[k - 1]) u[--k] = 0;
        if (k == 0) break;
        ++u[k - 1];
    }
    return out;
}

bool residue_equal(const ResidueFormVec& a, const ResidueFormVec& b) {
    if (a.period.size() != b.period.size()) return false;
    const int rows = static_cast<int>(a.period.size());
    std::vector<std::int64_t> period(rows);
    for (int k = 0; k < rows; ++k) period[k] = std::lcm(a.period[k], b.period[k]);
    std::vector<std::int64_t> u(rows, 0);
    std::vector<std::int64_t> ua(rows), ub(rows);
    while (true) {
        for (int k = 0; k < rows; ++k) {
            ua[k] = u[k] % a.period[k];
            ub[k] = u[k] % b.period[k];
        }
        if (a.polys.at(ua) != b.polys.at(ub)) return false;
        int k = rows;
        while (k > 0 && u[k - 1] + 1 == period[k - 1]) u[--k] = 0;
        if (k == 0) break;
        ++u[k - 1];
    }
    return true;
}

}  // namespace sylvester
