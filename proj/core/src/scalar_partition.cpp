#include "sylvester/scalar_partition.hpp"

#include <numeric>
#include <set>
#include <stdexcept>

#include "sylvester/number_theory.hpp"
#include "sylvester/poly_families.hpp"

namespace sylvester {

void validate_parts(const PartList& parts) {
    if (parts.d.empty()) throw std::invalid_argument("part list must be nonempty");
    for (std::int64_t d : parts.d) {
        if (d < 1) throw std::invalid_argument("parts must be positive integers");
    }
}

std::int64_t part_sum(const PartList& parts) {
    return std::accumulate(parts.d.begin(), parts.d.end(), std::int64_t{0});
}

mpz_class part_product(const PartList& parts) {
    mpz_class p = 1;
    for (std::int64_t d : parts.d) p *= static_cast<long>(d);
    return p;
}

std::uint64_t brute_count(std::int64_t s, const PartList& parts) {
    validate_parts(parts);
    if (s < 0) throw std::invalid_argument("count argument must be nonnegative");
    std::vector<std::uint64_t> ways(static_cast<std::size_t>(s) + 1, 0);
    ways[0] = 1;
    for (std::int64_t d : parts.d) {
        for (std::int64_t t = d; t <= s; ++t) ways[t] += ways[t - d];
    }
    return ways[s];
}

JModifiedParts j_modified(const PartList& parts, std::int64_t j) {
    validate_parts(parts);
    if (j < 1) throw std::invalid_argument("wave period must be >= 1");
    JModifiedParts out;
    for (std::int64_t d : parts.d) {
        if (d % j == 0) {
            out.modified.d.push_back(d);
            ++out.omega;
        } else {
            out.nondivisible.push_back(d);
        }
    }
    for (std::int64_t d : out.nondivisible) out.modified.d.push_back(j * d);
    return out;
}

MultiPoly poly_part(const PartList& parts) {
    validate_parts(parts);
    const int m = static_cast<int>(parts.d.size());
    MultiPoly b = higher_order_bernoulli(m - 1, {parts.d});
    const std::vector<BigRational> sigma{BigRational(part_sum(parts))};
    return b.shifted(sigma) *
           GaussianRational(BigRational(mpz_class(1), factorial(m - 1) * part_product(parts)));
}

std::vector<QuasiTerm1D> sylvester_wave(std::int64_t j, const PartList& parts) {
    const JModifiedParts mod = j_modified(parts, j);
    const MultiPoly w1 = poly_part(mod.modified);

    std::map<std::int64_t, MultiPoly> by_shift;
    const std::size_t free_count = mod.nondivisible.size();
    std::vector<std::int64_t> r(free_count, 0);
    while (true) {
        std::int64_t shift = 0;
        for (std::size_t i = 0; i < free_count; ++i) shift += r[i] * mod.nondivisible[i];
        const std::vector<BigRational> offset{BigRational(-shift)};
        MultiPoly poly = w1.shifted(offset);
        auto it = by_shift.find(shift);
        if (it == by_shift.end()) {
            by_shift.emplace(shift, std::move(poly));
        } else {
            it->second += poly;
        }

        std::size_t i = free_count;
        while (i > 0 && r[i - 1] == j - 1) r[--i] = 0;
        if (i == 0) break;
        ++r[i - 1];
    }

    std::vector<QuasiTerm1D> terms;
    for (auto& [shift, poly] : by_shift) {
        if (!poly.is_zero()) terms.push_back({j, shift, std::move(poly)});
    }
    return terms;
}

std::vector<std::int64_t> wave_periods(const PartList& parts) {
    validate_parts(parts);
    std::set<std::int64_t> js;
    for (std::int64_t d : parts.d) {
        for (std::int64_t f : divisors(d)) js.insert(f);
    }
    return {js.begin(), js.end()};
}

QuasiPoly1D partition_quasipoly(const PartList& parts) {
    QuasiPoly1D q;
    for (std::int64_t j : wave_periods(parts)) {
        for (QuasiTerm1D& t : sylvester_wave(j, parts)) q.terms.push_back(std::move(t));
    }
    return q;
}

BigRational evaluate_quasipoly(const QuasiPoly1D& q, std::int64_t s) {
    BigRational sum(0);
    const std::vector<BigRational> point{BigRational(s)};
    for (const QuasiTerm1D& t : q.terms) {
        const std::int64_t psi = prime_circulator(t.j, s - t.shift);
        if (psi == 0) continue;
        sum += t.poly.evaluate_real(point) * BigRational(psi);
    }
    return sum;
}

ResidueForm1D residue_form(const QuasiPoly1D& q) {
    ResidueForm1D out;
    for (const QuasiTerm1D& t : q.terms) out.period = std::lcm(out.period, t.j);
    for (std::int64_t u = 0; u < out.period; ++u) {
        MultiPoly acc(1);
        for (const QuasiTerm1D& t : q.terms) {
            const std::int64_t psi = prime_circulator(t.j, u - t.shift);
            if (psi != 0) acc += t.poly * GaussianRational(BigRational(psi));
        }
        out.polys.emplace(u, std::move(acc));
    }
    return out;
}

bool residue_equal(const ResidueForm1D& a, const ResidueForm1D& b) {
    const std::int64_t period = std::lcm(a.period, b.period);
    for (std::int64_t u = 0; u < period; ++u) {
        if (a.polys.at(u % a.period) != b.polys.at(u % b.period)) return false;
    }
    return true;
}

}  // namespace sylvester
