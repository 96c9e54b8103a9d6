#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "sylvester/intmatrix.hpp"
#include "sylvester/multipoly.hpp"

namespace sylvester {

/// Validated nonnegative integer l x m matrix for the vector partition
/// function: no all-zero column, at least as many columns as rows, and full
/// row rank over the rationals. Row-degenerate systems are rejected rather
/// than reduced.
class MatrixSpec {
public:
    static MatrixSpec validate(IntMatrix D);

    const IntMatrix& matrix() const { return D_; }
    int rows() const { return D_.rows; }
    int cols() const { return D_.cols; }
    std::vector<std::int64_t> column(int i) const { return D_.column(i); }
    /// Componentwise sum of the columns.
    std::vector<std::int64_t> sigma() const;

private:
    explicit MatrixSpec(IntMatrix D) : D_(std::move(D)) {}
    IntMatrix D_;
};

/// Column classification for one period vector j: a column is divisible when
/// every row entry is divisible by the matching j component; each remaining
/// column carries the minimal period p with j | p * column.
struct JClassification {
    std::vector<std::int64_t> j;
    int omega = 0;
    std::vector<int> divisible_columns;
    std::vector<int> nondivisible_columns;
    std::vector<std::int64_t> periods;  // aligned with nondivisible_columns, each >= 2
};

/// One decomposition term; its value is weight * poly(s) * Psi_j(s - shift).
struct VectorWaveTerm {
    std::vector<std::int64_t> shift;
    BigRational weight;  // 1 / pi(p^(m - omega_j)) for the owning wave
    MultiPoly poly;      // polynomial in s_1..s_l, real coefficients
};

/// All terms of one (n, j) pair. The alpha-dependent mixture coefficient
/// C_n = alpha^(n+1) / (n! P_m(alpha, D)) is applied at evaluation time.
struct PartialWave {
    Exponents n;
    std::vector<std::int64_t> j;
    std::vector<VectorWaveTerm> terms;  // sorted by shift, zero polys pruned
};

/// Exact count of nonnegative integer solutions of D x = s by bounded
/// enumeration over the columns.
std::uint64_t brute_vector_count(std::span<const std::int64_t> s, const MatrixSpec& D);

/// Cartesian power of the divisor set of all nonzero matrix entries.
std::vector<std::vector<std::int64_t>> enumerate_j(const MatrixSpec& D);

JClassification classify_columns(const MatrixSpec& D, std::span<const std::int64_t> j);

/// Divisible columns kept first (original order), every other column
/// multiplied by its period.
MatrixSpec j_modified_matrix(const MatrixSpec& D, const JClassification& cls);
MatrixSpec j_modified_matrix(const MatrixSpec& D, std::span<const std::int64_t> j);

/// P_m(t, D) = prod_i (c_i . t), homogeneous of degree m in l variables.
MultiPoly homogeneous_poly(const MatrixSpec& D);

/// C_n(alpha, D) = alpha^(n+1) / (n! P_m(alpha, D)); rejects alpha on the
/// zero set of P_m.
GaussianRational coefficient_C(const Exponents& n, std::span<const GaussianRational> alpha,
                               const MatrixSpec& D);

/// Partial polynomial part: B^(l,m)_n(s + sigma(D) | D), |n| = m - l.
MultiPoly partial_poly_part(const Exponents& n, const MatrixSpec& D);

/// Terms of the (n, j) partial wave: polynomials
/// B^(l,m)_n(s + sigma(D_j) - r.D_nondiv | D_j) with weight 1/pi(p) against
/// circulators Psi_j(s - r.D_nondiv), summed over r_i in [0, p_i).
std::vector<VectorWaveTerm> partial_wave(const Exponents& n, std::span<const std::int64_t> j,
                                         const MatrixSpec& D);

/// The full wave decomposition of the vector partition function. Evaluation
/// with a chamber vector alpha yields the count as the real part of
/// sum_n C_n(alpha, D) * W^n(s).
class VectorWaveDecomposition {
public:
    explicit VectorWaveDecomposition(MatrixSpec D);

    const MatrixSpec& matrix_spec() const { return D_; }
    int rows() const { return D_.rows(); }
    int cols() const { return D_.cols(); }
    const std::vector<PartialWave>& waves() const { return waves_; }
    const std::vector<Exponents>& partial_wave_indices() const { return indices_; }
    const MultiPoly& chamber_polynomial() const { return p_m_; }

    /// All terms of the alpha-independent partial wave W^n (union over j).
    std::vector<const PartialWave*> waves_for(const Exponents& n) const;

    /// Exact value of W^n at an integer point.
    BigRational partial_wave_value(const Exponents& n, std::span<const std::int64_t> s) const;

private:
    MatrixSpec D_;
    MultiPoly p_m_;
    std::vector<Exponents> indices_;  // all n with |n| = m - l, lex ascending
    std::vector<PartialWave> waves_;  // sorted by (n, j)
};

VectorWaveDecomposition decompose(const MatrixSpec& D);

struct EvalOptions {
    /// Evaluate lim_{eps->0} of the mixture along alpha + eps*direction when
    /// alpha lies on the zero set of P_m (the ratio of leading coefficients).
    bool projective_limit = false;
    /// Perturbation direction; all-ones when empty.
    std::vector<BigRational> direction;
};

/// sum_n C_n(alpha, D) W^n(s), exact. Without the projective limit option,
/// alpha with P_m(alpha, D) = 0 is rejected.
GaussianRational evaluate(const VectorWaveDecomposition& decomp, std::span<const std::int64_t> s,
                          std::span<const GaussianRational> alpha, const EvalOptions& opts = {});

/// Real part of evaluate(): the count candidate on the selected chamber.
BigRational evaluate_real(const VectorWaveDecomposition& decomp, std::span<const std::int64_t> s,
                          std::span<const GaussianRational> alpha, const EvalOptions& opts = {});

/// Residue normal form of a collection of wave terms over the componentwise
/// lcm period; canonical representation for exact quasipolynomial equality.
struct ResidueFormVec {
    std::vector<std::int64_t> period;
    std::map<std::vector<std::int64_t>, MultiPoly> polys;
};

ResidueFormVec residue_form(std::span<const PartialWave> waves, int rows);
bool residue_equal(const ResidueFormVec& a, const ResidueFormVec& b);

}  // namespace sylvester
