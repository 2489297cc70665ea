#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "gridbench/errors.hpp"

namespace gridbench {

using CellValue = std::uint8_t;

/// Grids never exceed this side length.
inline constexpr int kMaxSide = 64;
/// Cell values live in 0..kMaxCellValue across every task family.
inline constexpr CellValue kMaxCellValue = 15;

/// Rectangular array of small-integer cell values, row-major.
///
/// This is the universal task state: puzzle boards, mazes, automata fields
/// and ARC grids are all Grid values with a per-family value convention.
class Grid {
public:
    Grid() = default;

    Grid(int rows, int cols, CellValue fill = 0) : rows_(rows), cols_(cols) {
        check_dims(rows, cols);
        if (fill > kMaxCellValue) throw ValueOutOfRange(fill);
        cells_.assign(static_cast<std::size_t>(rows) * cols, fill);
    }

    Grid(int rows, int cols, std::vector<CellValue> cells)
        : rows_(rows), cols_(cols), cells_(std::move(cells)) {
        check_dims(rows, cols);
        if (cells_.size() != static_cast<std::size_t>(rows) * cols)
            throw BadDimensions("cell count does not match rows x cols");
        for (CellValue v : cells_)
            if (v > kMaxCellValue) throw ValueOutOfRange(v);
    }

    /// Convenience for literal grids in tests and fixtures.
    static Grid from_rows(std::initializer_list<std::initializer_list<int>> rows) {
        if (rows.size() == 0) throw BadDimensions("grid needs at least one row");
        const int r = static_cast<int>(rows.size());
        const int c = static_cast<int>(rows.begin()->size());
        Grid g(r, c);
        int i = 0;
        for (const auto& row : rows) {
            if (static_cast<int>(row.size()) != c)
                throw RaggedRows(static_cast<std::size_t>(i));
            int j = 0;
            for (int v : row) g.set(i, j++, v);
            ++i;
        }
        return g;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    CellValue at(int r, int c) const { return cells_[index(r, c)]; }

    void set(int r, int c, int v) {
        if (v < 0 || v > kMaxCellValue) throw ValueOutOfRange(v);
        if (!in_bounds(r, c)) throw BadDimensions("cell index out of bounds");
        cells_[index(r, c)] = static_cast<CellValue>(v);
    }

    bool in_bounds(int r, int c) const {
        return r >= 0 && r < rows_ && c >= 0 && c < cols_;
    }

    std::span<const CellValue> cells() const { return cells_; }

    friend bool operator==(const Grid&, const Grid&) = default;

private:
    static void check_dims(int rows, int cols) {
        if (rows < 1 || cols < 1)
            throw BadDimensions("grid dimensions must be positive");
        if (rows > kMaxSide || cols > kMaxSide)
            throw BadDimensions("grid side exceeds " + std::to_string(kMaxSide));
    }

    std::size_t index(int r, int c) const {
        return static_cast<std::size_t>(r) * cols_ + c;
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<CellValue> cells_;
};

/// Exact-match comparison: same dimensions and every cell equal.
inline bool grids_equal(const Grid& a, const Grid& b) { return a == b; }

}  // namespace gridbench
