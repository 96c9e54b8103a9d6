#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace sylvester {

/// Dense row-major integer matrix; just storage plus column access.
struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::int64_t> entries;  // rows * cols, row-major

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), entries(static_cast<std::size_t>(r) * c, 0) {
        if (r < 0 || c < 0) throw std::invalid_argument("negative matrix dimension");
    }

    std::int64_t& at(int r, int c) { return entries[static_cast<std::size_t>(r) * cols + c]; }
    std::int64_t at(int r, int c) const { return entries[static_cast<std::size_t>(r) * cols + c]; }

    std::vector<std::int64_t> column(int c) const {
        std::vector<std::int64_t> out(rows);
        for (int r = 0; r < rows; ++r) out[r] = at(r, c);
        return out;
    }

    static IntMatrix from_columns(int rows, const std::vector<std::vector<std::int64_t>>& columns) {
        IntMatrix m(rows, static_cast<int>(columns.size()));
        for (int c = 0; c < m.cols; ++c) {
            if (static_cast<int>(columns[c].size()) != rows)
                throw std::invalid_argument("column length mismatch");
            for (int r = 0; r < rows; ++r) m.at(r, c) = columns[c][r];
        }
        return m;
    }

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows == b.rows && a.cols == b.cols && a.entries == b.entries;
    }
};

}  // namespace sylvester
