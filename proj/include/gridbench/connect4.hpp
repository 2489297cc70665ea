#pragma once

#include <vector>

#include "gridbench/errors.hpp"
#include "gridbench/grid.hpp"
#include "gridbench/rng.hpp"

namespace gridbench {

inline constexpr int kC4Rows = 6;
inline constexpr int kC4Cols = 7;

/// A position one move away from a win, with exactly one winning column
/// for the side to move. Row 0 is the top of the board.
struct Connect4Instance {
    Grid board;
    int mover = 1;
    int winning_column = 0;
};

namespace detail_c4 {

inline bool line_through(const Grid& b, int r, int c, int player) {
    static constexpr int dirs[4][2] = {{0, 1}, {1, 0}, {1, 1}, {1, -1}};
    for (const auto& d : dirs) {
        int run = 1;
        for (int s = 1; s < 4; ++s) {
            const int rr = r + d[0] * s, cc = c + d[1] * s;
            if (!b.in_bounds(rr, cc) || b.at(rr, cc) != player) break;
            ++run;
        }
        for (int s = 1; s < 4; ++s) {
            const int rr = r - d[0] * s, cc = c - d[1] * s;
            if (!b.in_bounds(rr, cc) || b.at(rr, cc) != player) break;
            ++run;
        }
        if (run >= 4) return true;
    }
    return false;
}

inline bool any_line(const Grid& b) {
    for (int r = 0; r < kC4Rows; ++r)
        for (int c = 0; c < kC4Cols; ++c)
            if (b.at(r, c) != 0 && line_through(b, r, c, b.at(r, c))) return true;
    return false;
}

inline int drop_row(const Grid& b, int col) {
    for (int r = kC4Rows - 1; r >= 0; --r)
        if (b.at(r, col) == 0) return r;
    return -1;
}

}  // namespace detail_c4

/// The side to move, inferred from token parity: equal counts mean player
/// one moves next.
inline int infer_c4_mover(const Grid& b) {
    int n1 = 0, n2 = 0;
    for (CellValue v : b.cells()) {
        if (v == 1) ++n1;
        else if (v == 2) ++n2;
    }
    if (n1 == n2) return 1;
    if (n1 == n2 + 1) return 2;
    throw IllegalBoard("token counts are not consistent with alternating play");
}

/// Board sanity: 6x7, values {0,1,2}, gravity respected, counts consistent
/// with alternating play, and no completed line anywhere.
inline void check_c4_board(const Grid& b) {
    if (b.rows() != kC4Rows || b.cols() != kC4Cols)
        throw IllegalBoard("board must be 6x7");
    for (CellValue v : b.cells())
        if (v > 2) throw IllegalBoard("cells must be 0, 1 or 2");
    for (int c = 0; c < kC4Cols; ++c)
        for (int r = 1; r < kC4Rows; ++r)
            if (b.at(r, c) == 0 && b.at(r - 1, c) != 0)
                throw IllegalBoard("token floats above an empty cell");
    infer_c4_mover(b);
    if (detail_c4::any_line(b)) throw IllegalBoard("board already contains a line of four");
}

/// Columns where dropping the mover's token completes a line of four.
inline std::vector<int> find_connect4_wins(const Grid& board, int mover) {
    check_c4_board(board);
    if (mover != 1 && mover != 2) throw IllegalBoard("mover must be 1 or 2");
    std::vector<int> wins;
    for (int col = 0; col < kC4Cols; ++col) {
        const int row = detail_c4::drop_row(board, col);
        if (row < 0) continue;
        Grid b = board;
        b.set(row, col, mover);
        if (detail_c4::line_through(b, row, col, mover)) wins.push_back(col);
    }
    return wins;
}

/// Apply the winning drop (gravity) and return the resulting board.
inline Grid apply_c4_move(const Grid& board, int mover, int col) {
    const int row = detail_c4::drop_row(board, col);
    if (row < 0) throw IllegalBoard("column is full");
    Grid b = board;
    b.set(row, col, mover);
    return b;
}

/// Generate by random legal playout truncated before any win, then filter
/// to positions whose mover has exactly one winning column.
inline Connect4Instance gen_connect4(std::uint64_t seed, int max_tries = 20000) {
    Rng rng(seed);
    for (int attempt = 0; attempt < max_tries; ++attempt) {
        Grid board(kC4Rows, kC4Cols);
        const int target_moves = 8 + rng.below_int(23);  // 8..30 plies
        int player = 1;
        for (int ply = 0; ply < target_moves; ++ply) {
            std::vector<int> open;
            for (int c = 0; c < kC4Cols; ++c)
                if (detail_c4::drop_row(board, c) >= 0) open.push_back(c);
            if (open.empty()) break;
            const int col = open[rng.below(open.size())];
            const int row = detail_c4::drop_row(board, col);
            Grid next = board;
            next.set(row, col, player);
            if (detail_c4::line_through(next, row, col, player)) break;  // stop before a win
            board = std::move(next);
            player = 3 - player;
        }
        const int mover = infer_c4_mover(board);
        std::vector<int> wins;
        try {
            wins = find_connect4_wins(board, mover);
        } catch (const IllegalBoard&) {
            continue;
        }
        if (wins.size() == 1)
            return Connect4Instance{std::move(board), mover, wins[0]};
    }
    throw GenerationExhausted("no single-winning-column position found");
}

}  // namespace gridbench
