#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <optional>
#include <vector>

#include "gridbench/errors.hpp"
#include "gridbench/grid.hpp"
#include "gridbench/rng.hpp"

namespace gridbench {

/// A solved puzzle with a clue subset whose completion is unique.
/// Value 0 marks an empty cell in `givens`.
struct SudokuInstance {
    int size = 9;  ///< 4 or 9
    int box = 3;   ///< 2 or 3
    Grid givens;
    Grid solution;
};

namespace detail_sudoku {

inline int box_side(int size) {
    if (size == 4) return 2;
    if (size == 9) return 3;
    throw DataError("sudoku size must be 4 or 9");
}

struct Masks {
    std::array<unsigned, 9> row{}, col{}, box{};
};

inline int box_of(int r, int c, int box) { return (r / box) * box + (c / box); }

/// Validates dimensions, value range and clue consistency; returns masks.
inline Masks scan_givens(const Grid& g) {
    const int size = g.rows();
    if (g.cols() != size) throw InvalidGivens("sudoku grid must be square");
    const int box = box_side(size);
    Masks m;
    for (int r = 0; r < size; ++r) {
        for (int c = 0; c < size; ++c) {
            const int v = g.at(r, c);
            if (v == 0) continue;
            if (v > size) throw InvalidGivens("value exceeds the grid size");
            const unsigned bit = 1u << (v - 1);
            const int b = box_of(r, c, box);
            if ((m.row[r] & bit) || (m.col[c] & bit) || (m.box[b] & bit))
                throw InvalidGivens("duplicate clue in a row, column or box");
            m.row[r] |= bit;
            m.col[c] |= bit;
            m.box[b] |= bit;
        }
    }
    return m;
}

/// Backtracking counter with most-constrained-cell ordering. Counts
/// completions up to `cap`; optionally records the first solution found.
/// `value_order`, when given, fixes the candidate order per cell (used by
/// the generator to build random full grids).
inline int count_completions(Grid& g, int cap, Grid* first_solution,
                             const std::vector<std::array<std::uint8_t, 9>>* value_order) {
    const int size = g.rows();
    const int box = box_side(size);
    Masks m = scan_givens(g);
    const unsigned full = (1u << size) - 1;

    std::vector<std::pair<int, int>> empties;
    for (int r = 0; r < size; ++r)
        for (int c = 0; c < size; ++c)
            if (g.at(r, c) == 0) empties.emplace_back(r, c);

    int count = 0;
    auto rec = [&](auto&& self, std::size_t filled) -> void {
        if (count >= cap) return;
        if (filled == empties.size()) {
            ++count;
            if (count == 1 && first_solution) *first_solution = g;
            return;
        }
        // most-constrained empty cell next
        std::size_t pick = filled;
        int best_options = size + 1;
        for (std::size_t i = filled; i < empties.size(); ++i) {
            const auto [r, c] = empties[i];
            const unsigned cand =
                full & ~(m.row[r] | m.col[c] | m.box[box_of(r, c, box)]);
            const int n = std::popcount(cand);
            if (n < best_options) {
                best_options = n;
                pick = i;
                if (n <= 1) break;
            }
        }
        if (best_options == 0) return;
        std::swap(empties[filled], empties[pick]);
        const auto [r, c] = empties[filled];
        const int b = box_of(r, c, box);
        const unsigned cand = full & ~(m.row[r] | m.col[c] | m.box[b]);
        auto try_value = [&](int v) {
            const unsigned bit = 1u << (v - 1);
            if (!(cand & bit)) return;
            m.row[r] |= bit;
            m.col[c] |= bit;
            m.box[b] |= bit;
            g.set(r, c, v);
            self(self, filled + 1);
            g.set(r, c, 0);
            m.row[r] &= ~bit;
            m.col[c] &= ~bit;
            m.box[b] &= ~bit;
        };
        if (value_order) {
            for (int v : (*value_order)[static_cast<std::size_t>(r) * size + c])
                if (v != 0) try_value(v);
        } else {
            for (int v = 1; v <= size; ++v) try_value(v);
        }
        std::swap(empties[filled], empties[pick]);
    };
    rec(rec, 0);
    return count;
}

}  // namespace detail_sudoku

/// Count completions of a clue grid by exhaustive backtracking, truncated
/// at `cap`. cap = 2 suffices to decide uniqueness.
inline int count_sudoku_solutions(const Grid& givens, int cap) {
    if (cap < 1) throw DataError("cap must be positive");
    Grid work = givens;
    return detail_sudoku::count_completions(work, cap, nullptr, nullptr);
}

/// First completion in deterministic order, if any.
inline std::optional<Grid> solve_sudoku(const Grid& givens) {
    Grid work = givens;
    Grid solution;
    if (detail_sudoku::count_completions(work, 1, &solution, nullptr) == 0)
        return std::nullopt;
    return solution;
}

/// All completions up to `cap`.
inline std::vector<Grid> sudoku_solutions(const Grid& givens, int cap) {
    std::vector<Grid> out;
    Grid work = givens;
    const int size = givens.rows();
    detail_sudoku::Masks m = detail_sudoku::scan_givens(work);
    const int box = detail_sudoku::box_side(size);
    const unsigned full = (1u << size) - 1;
    auto rec = [&](auto&& self, int idx) -> void {
        if (static_cast<int>(out.size()) >= cap) return;
        if (idx == size * size) {
            out.push_back(work);
            return;
        }
        const int r = idx / size, c = idx % size;
        if (work.at(r, c) != 0) {
            self(self, idx + 1);
            return;
        }
        const int b = detail_sudoku::box_of(r, c, box);
        const unsigned cand = full & ~(m.row[r] | m.col[c] | m.box[b]);
        for (int v = 1; v <= size; ++v) {
            const unsigned bit = 1u << (v - 1);
            if (!(cand & bit)) continue;
            m.row[r] |= bit;
            m.col[c] |= bit;
            m.box[b] |= bit;
            work.set(r, c, v);
            self(self, idx + 1);
            work.set(r, c, 0);
            m.row[r] &= ~bit;
            m.col[c] &= ~bit;
            m.box[b] &= ~bit;
        }
    };
    rec(rec, 0);
    return out;
}

/// Generate an instance: fill a random complete grid, then remove cells in
/// random order, keeping a removal only while the completion stays unique,
/// until `clue_target` clues remain. Deterministic per seed.
inline SudokuInstance gen_sudoku(int size, int clue_target, std::uint64_t seed) {
    const int box = detail_sudoku::box_side(size);
    const int min_feasible = size == 4 ? 4 : 17;
    if (clue_target < min_feasible)
        throw DataError("clue_target below the minimal feasible count for this size");
    if (clue_target > size * size) throw DataError("clue_target exceeds the cell count");

    Rng rng(seed);

    // random full grid: backtracking with per-cell shuffled value order
    std::vector<std::array<std::uint8_t, 9>> order(
        static_cast<std::size_t>(size) * size);
    for (auto& cell_order : order) {
        std::vector<std::uint8_t> vals;
        for (int v = 1; v <= size; ++v) vals.push_back(static_cast<std::uint8_t>(v));
        rng.shuffle(vals);
        cell_order.fill(0);
        std::copy(vals.begin(), vals.end(), cell_order.begin());
    }
    Grid full(size, size);
    Grid solution;
    if (detail_sudoku::count_completions(full, 1, &solution, &order) == 0)
        throw GenerationExhausted("could not fill a complete grid");

    // dig down
    Grid givens = solution;
    std::vector<std::pair<int, int>> cells;
    for (int r = 0; r < size; ++r)
        for (int c = 0; c < size; ++c) cells.emplace_back(r, c);
    rng.shuffle(cells);
    int clues = size * size;
    for (const auto& [r, c] : cells) {
        if (clues == clue_target) break;
        const int saved = givens.at(r, c);
        givens.set(r, c, 0);
        if (count_sudoku_solutions(givens, 2) == 1) {
            --clues;
        } else {
            givens.set(r, c, saved);
        }
    }
    if (clues != clue_target) throw Unsatisfiable(clue_target);

    return SudokuInstance{size, box, std::move(givens), std::move(solution)};
}

}  // namespace gridbench
