#pragma once

#include <initializer_list>
#include <random>
#include <vector>

#include "sylvester/intmatrix.hpp"
#include "sylvester/multipoly.hpp"
#include "sylvester/vector_partition.hpp"

namespace sylvester::testing {

inline IntMatrix make_matrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
    const int r = static_cast<int>(rows.size());
    const int c = static_cast<int>(rows.begin()->size());
    IntMatrix m(r, c);
    int i = 0;
    for (const auto& row : rows) {
        int j = 0;
        for (std::int64_t v : row) m.at(i, j++) = v;
        ++i;
    }
    return m;
}

// The four worked 2x3 / 2x4 / 2x2 / 3x4 systems used throughout the tests.
inline IntMatrix example1() { return make_matrix({{1, 2, 0}, {1, 0, 1}}); }
inline IntMatrix example2() { return make_matrix({{1, 2, 1, 0}, {1, 1, 0, 1}}); }
inline IntMatrix example3() { return make_matrix({{1, 2}, {1, 0}}); }
inline IntMatrix example4() { return make_matrix({{2, 1, 0, 0}, {0, 1, 1, 2}, {0, 0, 1, 0}}); }

inline MultiPoly var(int count, int index) { return MultiPoly::variable(count, index); }

inline MultiPoly constant(int count, BigRational value) {
    return MultiPoly::constant(count, GaussianRational(std::move(value)));
}

inline GaussianRational imag_unit() { return {BigRational(0), BigRational(1)}; }

inline std::vector<GaussianRational> alpha_of(std::initializer_list<GaussianRational> values) {
    return {values};
}

struct Rng {
    std::mt19937 engine;
    explicit Rng(unsigned seed) : engine(seed) {}
    std::int64_t pick(std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine);
    }
};

}  // namespace sylvester::testing
