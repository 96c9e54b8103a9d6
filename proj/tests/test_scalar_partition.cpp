#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "sylvester/json_io.hpp"
#include "sylvester/scalar_partition.hpp"

using namespace sylvester;
using namespace sylvester::testing;

namespace {

BigRational integer(std::uint64_t n) {
    return BigRational(mpz_class(static_cast<unsigned long>(n)), 1);
}

}  // namespace

TEST_CASE("brute count") {
    CHECK(brute_count(0, {{5}}) == 1);
    CHECK(brute_count(0, {{1, 2, 3}}) == 1);
    CHECK(brute_count(4, {{1, 2}}) == 3);
    CHECK(brute_count(6, {{1, 2, 3}}) == 7);
    CHECK_THROWS_AS(brute_count(-1, {{1}}), std::invalid_argument);
    CHECK_THROWS_AS(brute_count(1, {{0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(brute_count(1, {{}}), std::invalid_argument);

    // Repeated parts are distinct variables: W(s, {1,1}) = s + 1.
    for (std::int64_t s = 0; s <= 20; ++s) {
        CHECK(brute_count(s, {{1, 1}}) == static_cast<std::uint64_t>(s) + 1);
    }

    // Cross-check the dynamic programming against plain enumeration.
    const PartList parts{{2, 3, 5}};
    for (std::int64_t s = 0; s <= 25; ++s) {
        std::uint64_t direct = 0;
        for (std::int64_t a = 0; 2 * a <= s; ++a)
            for (std::int64_t b = 0; 2 * a + 3 * b <= s; ++b)
                direct += (s - 2 * a - 3 * b) % 5 == 0;
        CHECK(brute_count(s, parts) == direct);
    }
}

TEST_CASE("j-modified part lists") {
    {
        const JModifiedParts r = j_modified({{1, 2, 3}}, 1);
        CHECK(r.modified.d == std::vector<std::int64_t>{1, 2, 3});
        CHECK(r.omega == 3);
        CHECK(r.nondivisible.empty());
    }
    {
        const JModifiedParts r = j_modified({{1, 2, 3}}, 2);
        CHECK(r.modified.d == std::vector<std::int64_t>{2, 2, 6});
        CHECK(r.omega == 1);
        CHECK(r.nondivisible == std::vector<std::int64_t>{1, 3});
    }
    {
        const JModifiedParts r = j_modified({{2, 4}}, 2);
        CHECK(r.modified.d == std::vector<std::int64_t>{2, 4});
        CHECK(r.omega == 2);
        CHECK(r.nondivisible.empty());
    }
}

TEST_CASE("polynomial part") {
    CHECK(poly_part({{1}}) == constant(1, 1));
    CHECK(poly_part({{1, 1}}) == var(1, 0) + constant(1, 1));
    // W_1(s, {1,2}) = s/2 + 3/4.
    CHECK(poly_part({{1, 2}}) ==
          var(1, 0) * GaussianRational(BigRational(1, 2)) + constant(1, BigRational(3, 4)));
}

TEST_CASE("sylvester waves") {
    {
        const auto terms = sylvester_wave(1, {{1, 2, 3}});
        REQUIRE(terms.size() == 1);
        CHECK(terms[0].j == 1);
        CHECK(terms[0].shift == 0);
        CHECK(terms[0].poly == poly_part({{1, 2, 3}}));
    }
    {
        // The period-2 wave of {1,2} evaluates to Psi_2(s)/4.
        QuasiPoly1D wave;
        wave.terms = sylvester_wave(2, {{1, 2}});
        for (std::int64_t s = 0; s <= 20; ++s) {
            CHECK(evaluate_quasipoly(wave, s) == BigRational(s % 2 == 0 ? 1 : -1, 4));
        }
    }
    {
        // No period-2 structure in {1,1}: the wave is identically zero.
        QuasiPoly1D wave;
        wave.terms = sylvester_wave(2, {{1, 1}});
        for (std::int64_t s = -10; s <= 20; ++s) {
            CHECK(evaluate_quasipoly(wave, s) == BigRational(0));
        }
    }
}

TEST_CASE("wave periods") {
    CHECK(wave_periods({{1}}) == std::vector<std::int64_t>{1});
    CHECK(wave_periods({{1, 2, 3}}) == std::vector<std::int64_t>{1, 2, 3});
    CHECK(wave_periods({{6, 10, 15}}) ==
          std::vector<std::int64_t>{1, 2, 3, 5, 6, 10, 15});
}

TEST_CASE("quasipolynomial equals enumeration") {
    const std::vector<PartList> battery{
        {{1}}, {{1, 2}}, {{1, 2, 3}}, {{2, 3, 5, 7}}, {{1, 1, 2, 2}}, {{6, 10, 15}},
        {{4, 6}}, {{3, 3, 3}}, {{1, 5, 10, 10, 12}},
    };
    for (const PartList& parts : battery) {
        const QuasiPoly1D q = partition_quasipoly(parts);
        for (std::int64_t s = 0; s <= 60; ++s) {
            const BigRational value = evaluate_quasipoly(q, s);
            CHECK(value == integer(brute_count(s, parts)));
        }
    }
}

TEST_CASE("evaluation examples") {
    CHECK(evaluate_quasipoly(partition_quasipoly({{1}}), 17) == BigRational(1));
    CHECK(evaluate_quasipoly(partition_quasipoly({{1, 2, 3}}), 6) == BigRational(7));
}

TEST_CASE("recursion of the partition function") {
    const std::vector<PartList> battery{{{1, 2}}, {{1, 2, 3}}, {{2, 3, 5}}, {{1, 1, 2, 2}}};
    for (const PartList& parts : battery) {
        PartList head{std::vector<std::int64_t>(parts.d.begin(), parts.d.end() - 1)};
        const QuasiPoly1D whole = partition_quasipoly(parts);
        const QuasiPoly1D shorter = partition_quasipoly(head);
        const std::int64_t last = parts.d.back();
        for (std::int64_t s = -20; s <= 40; ++s) {
            CHECK(evaluate_quasipoly(whole, s) - evaluate_quasipoly(whole, s - last) ==
                  evaluate_quasipoly(shorter, s));
        }
    }
}

TEST_CASE("symmetry of the partition function") {
    const std::vector<PartList> battery{{{1, 2}}, {{1, 2, 3}}, {{2, 3, 5, 7}}, {{1, 1, 2, 2}}};
    for (const PartList& parts : battery) {
        const QuasiPoly1D q = partition_quasipoly(parts);
        const int sign = parts.d.size() % 2 == 1 ? 1 : -1;
        const std::int64_t sigma = part_sum(parts);
        for (std::int64_t s = 0; s <= 30; ++s) {
            CHECK(evaluate_quasipoly(q, s) ==
                  evaluate_quasipoly(q, -s - sigma) * BigRational(sign));
        }
    }
}

TEST_CASE("residue normal form") {
    const QuasiPoly1D q = partition_quasipoly({{1, 2}});
    const ResidueForm1D form = residue_form(q);
    CHECK(form.period == 2);
    // s/2 + 3/4 + Psi_2(s)/4 restricted to even and odd residues.
    const MultiPoly half_s = var(1, 0) * GaussianRational(BigRational(1, 2));
    CHECK(form.polys.at(0) == half_s + constant(1, 1));
    CHECK(form.polys.at(1) == half_s + constant(1, BigRational(1, 2)));
    CHECK(residue_equal(form, form));

    QuasiPoly1D shifted_terms;  // same function written with shift 2 on the circulator
    for (QuasiTerm1D t : q.terms) {
        if (t.j == 2) t.shift += 2;
        shifted_terms.terms.push_back(t);
    }
    CHECK(residue_equal(form, residue_form(shifted_terms)));

    QuasiPoly1D different = q;
    different.terms[0].poly += constant(1, 1);
    CHECK_FALSE(residue_equal(form, residue_form(different)));
}

TEST_CASE("quasipolynomial JSON is sorted and deterministic") {
    const QuasiPoly1D q = partition_quasipoly({{1, 2, 3}});
    const std::string once = to_json(q);
    CHECK(once == to_json(partition_quasipoly({{1, 2, 3}})));
    std::int64_t prev_j = 0, prev_shift = -1;
    for (const QuasiTerm1D& t : q.terms) {
        CHECK(t.j >= prev_j);
        if (t.j == prev_j) CHECK(t.shift > prev_shift);
        prev_j = t.j;
        prev_shift = t.shift;
        CHECK(t.poly.has_real_coefficients());
        CHECK_FALSE(t.poly.is_zero());
    }
    CHECK(once.find("\"terms\"") != std::string::npos);
}
