#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "sylvester/multipoly.hpp"

namespace sylvester {

/// List of positive parts d^m (repeats allowed, each a distinct variable of
/// the underlying Diophantine equation d . x = s).
struct PartList {
    std::vector<std::int64_t> d;
};

void validate_parts(const PartList& parts);
std::int64_t part_sum(const PartList& parts);
mpz_class part_product(const PartList& parts);

/// One quasipolynomial term: value contribution poly(s) * Psi_j(s - shift).
struct QuasiTerm1D {
    std::int64_t j;
    std::int64_t shift;
    MultiPoly poly;  // one variable s, real coefficients
};

/// Scalar quasipolynomial as a sum of polynomial-times-circulator terms,
/// sorted by (j, shift); identically-zero polynomials are pruned.
struct QuasiPoly1D {
    std::vector<QuasiTerm1D> terms;
};

/// Number of nonnegative integer solutions of d . x = s (dynamic
/// programming over the parts). Rejects s < 0.
std::uint64_t brute_count(std::int64_t s, const PartList& parts);

struct JModifiedParts {
    PartList modified;                       // j-divisible parts first, then j * rest
    int omega = 0;                           // count of parts already divisible by j
    std::vector<std::int64_t> nondivisible;  // the original non-divisible parts, in order
};

/// Keeps the j-divisible parts and multiplies the remaining parts by j, so
/// every element of the result is divisible by j.
JModifiedParts j_modified(const PartList& parts, std::int64_t j);

/// Polynomial part W_1(s, d) = B^(m)_(m-1)(s + sigma(d) | d) / ((m-1)! pi(d)).
MultiPoly poly_part(const PartList& parts);

/// Wave of period j: sum over r in [0,j)^(m - omega_j) of
/// W_1(s - r.d_nondiv, d_j) Psi_j(s - r.d_nondiv). Terms with equal shift are
/// merged; zero polynomials are dropped.
std::vector<QuasiTerm1D> sylvester_wave(std::int64_t j, const PartList& parts);

/// Distinct divisors of the elements of the part list, sorted.
std::vector<std::int64_t> wave_periods(const PartList& parts);

/// Full quasipolynomial: union of the waves over all periods.
QuasiPoly1D partition_quasipoly(const PartList& parts);

/// Exact value at any integer s (negative s is allowed; the symmetry of the
/// partition function lives outside the counting range).
BigRational evaluate_quasipoly(const QuasiPoly1D& q, std::int64_t s);

/// Residue normal form: the quasipolynomial restricted to each residue class
/// u (mod period) is an honest polynomial. Canonical for comparisons.
struct ResidueForm1D {
    std::int64_t period = 1;
    std::map<std::int64_t, MultiPoly> polys;  // one entry per residue 0..period-1
};

ResidueForm1D residue_form(const QuasiPoly1D& q);
bool residue_equal(const ResidueForm1D& a, const ResidueForm1D& b);

}  // namespace sylvester
