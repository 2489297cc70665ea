#pragma once

#include <cctype>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gridbench/errors.hpp"
#include "gridbench/grid.hpp"

namespace gridbench {

/// How cells beyond the edge behave: wrap around, or read as dead.
enum class Boundary { Toroidal, FixedDead };

inline const char* boundary_name(Boundary b) {
    return b == Boundary::Toroidal ? "toroidal" : "dead";
}

inline Boundary boundary_from_name(const std::string& s) {
    if (s == "toroidal") return Boundary::Toroidal;
    if (s == "dead" || s == "fixed-dead") return Boundary::FixedDead;
    throw DataError("unknown boundary mode '" + s + "'");
}

// Boundary modes pinned by the calibration tests against the bundled
// golden pairs: the one-dimensional evolution reproduces only under wrap,
// the Game of Life pair only with dead edges.
inline constexpr Boundary kEcaDefaultBoundary = Boundary::Toroidal;
inline constexpr Boundary kLifeDefaultBoundary = Boundary::FixedDead;
inline constexpr Boundary kAntDefaultBoundary = Boundary::FixedDead;

// ---- elementary (one-dimensional) automata ----

using BitRow = std::vector<std::uint8_t>;

/// Rule table of an elementary automaton: bit k of the rule number is the
/// next state of the neighborhood (left, center, right) with value
/// k = 4*left + 2*center + right.
struct EcaRule {
    int number = 0;

    explicit EcaRule(int n) : number(n) {
        if (n < 0 || n > 255) throw DataError("rule number must lie in 0..255");
    }

    std::uint8_t next(std::uint8_t left, std::uint8_t center, std::uint8_t right) const {
        return static_cast<std::uint8_t>((number >> (4 * left + 2 * center + right)) & 1);
    }

    /// The left-right mirrored rule: neighborhoods read backwards.
    EcaRule mirrored() const {
        int m = 0;
        for (int k = 0; k < 8; ++k) {
            const int left = k >> 2, center = (k >> 1) & 1, right = k & 1;
            const int flipped = 4 * right + 2 * center + left;
            m |= ((number >> k) & 1) << flipped;
        }
        return EcaRule(m);
    }
};

inline BitRow eca_step(const BitRow& row, const EcaRule& rule, Boundary boundary) {
    if (row.empty()) throw DataError("row must be nonempty");
    const int n = static_cast<int>(row.size());
    BitRow out(n);
    for (int i = 0; i < n; ++i) {
        std::uint8_t l, r;
        if (boundary == Boundary::Toroidal) {
            l = row[(i + n - 1) % n];
            r = row[(i + 1) % n];
        } else {
            l = i > 0 ? row[i - 1] : 0;
            r = i < n - 1 ? row[i + 1] : 0;
        }
        out[i] = rule.next(l, row[i], r);
    }
    return out;
}

/// Rows 0..steps of the evolution, seed row first.
inline std::vector<BitRow> eca_evolve(const BitRow& seed, const EcaRule& rule, int steps,
                                      Boundary boundary) {
    std::vector<BitRow> rows{seed};
    for (int s = 0; s < steps; ++s) rows.push_back(eca_step(rows.back(), rule, boundary));
    return rows;
}

// Task encoding: 0 = not yet evolved, 1 = dead cell, 2 = alive cell.
inline constexpr CellValue kEcaBackground = 0;
inline constexpr CellValue kEcaDead = 1;
inline constexpr CellValue kEcaAlive = 2;

/// (input, output) grids: the seed row sits on top of blank rows in the
/// input; the output holds the whole evolution.
inline std::pair<Grid, Grid> eca_task_grids(const BitRow& seed, const EcaRule& rule, int steps,
                                            Boundary boundary = kEcaDefaultBoundary) {
    if (steps < 0) throw DataError("steps must be non-negative");
    const int rows = steps + 1;
    const int cols = static_cast<int>(seed.size());
    if (cols == 0) throw DataError("seed row must be nonempty");
    if (rows > kMaxSide || cols > kMaxSide)
        throw DimensionMismatch("evolution exceeds the maximum grid side");

    auto encode = [&](const BitRow& row, Grid& g, int r) {
        for (int c = 0; c < cols; ++c) g.set(r, c, row[c] ? kEcaAlive : kEcaDead);
    };
    Grid input(rows, cols, kEcaBackground);
    encode(seed, input, 0);
    Grid output(rows, cols, kEcaBackground);
    const auto evolution = eca_evolve(seed, rule, steps, boundary);
    for (int r = 0; r < rows; ++r) encode(evolution[r], output, r);
    return {std::move(input), std::move(output)};
}

/// Representative rules by complexity class.
inline const std::vector<std::pair<int, std::vector<int>>>& wolfram_class_rules() {
    static const std::vector<std::pair<int, std::vector<int>>> table = {
        {1, {8, 32, 128, 160}},
        {2, {4, 108, 170, 250}},
        {3, {30, 45, 90, 150}},
        {4, {110, 54, 62, 106}},
    };
    return table;
}

// ---- life-like (two-dimensional) automata ----

/// Birth/survival rule over the eight-cell Moore neighborhood, e.g. B3/S23.
struct LifeRule {
    std::uint16_t birth = 0;    ///< bit k: a dead cell with k live neighbors is born
    std::uint16_t survive = 0;  ///< bit k: a live cell with k live neighbors survives

    bool born(int neighbors) const { return (birth >> neighbors) & 1; }
    bool survives(int neighbors) const { return (survive >> neighbors) & 1; }
};

/// Parse "B<digits>/S<digits>"; the survival list may be empty. Neighbor
/// counts above 8 are rejected.
inline LifeRule parse_bs(const std::string& text) {
    LifeRule rule;
    std::size_t i = 0;
    auto digits = [&](std::uint16_t& mask) {
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            const int d = text[i] - '0';
            if (d > 8) throw ParseError(i, "neighbor count out of range");
            mask |= static_cast<std::uint16_t>(1u << d);
            ++i;
        }
    };
    if (i >= text.size() || text[i] != 'B') throw ParseError(i, "expected 'B'");
    ++i;
    digits(rule.birth);
    if (i >= text.size() || text[i] != '/') throw ParseError(i, "expected '/'");
    ++i;
    if (i >= text.size() || text[i] != 'S') throw ParseError(i, "expected 'S'");
    ++i;
    digits(rule.survive);
    if (i != text.size()) throw ParseError(i, "trailing characters in rule");
    return rule;
}

inline std::string bs_string(const LifeRule& rule) {
    std::string out = "B";
    for (int d = 0; d <= 8; ++d)
        if (rule.born(d)) out += static_cast<char>('0' + d);
    out += "/S";
    for (int d = 0; d <= 8; ++d)
        if (rule.survives(d)) out += static_cast<char>('0' + d);
    return out;
}

inline Grid life_step(const Grid& grid, const LifeRule& rule,
                      Boundary boundary = kLifeDefaultBoundary) {
    const int rows = grid.rows(), cols = grid.cols();
    for (CellValue v : grid.cells())
        if (v > 1) throw NonBinaryCell("life fields are binary");

    Grid out(rows, cols);
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            int live = 0;
            for (int dr = -1; dr <= 1; ++dr) {
                for (int dc = -1; dc <= 1; ++dc) {
                    if (dr == 0 && dc == 0) continue;
                    int nr = r + dr, nc = c + dc;
                    if (boundary == Boundary::Toroidal) {
                        nr = (nr + rows) % rows;
                        nc = (nc + cols) % cols;
                    } else if (nr < 0 || nr >= rows || nc < 0 || nc >= cols) {
                        continue;
                    }
                    live += grid.at(nr, nc);
                }
            }
            const bool alive = grid.at(r, c) == 1;
            out.set(r, c, alive ? rule.survives(live) : rule.born(live));
        }
    }
    return out;
}

// ---- Langton's ant ----

enum class Heading { North, East, South, West };

/// Tasks always start the ant facing north on a dead cell.
inline constexpr Heading kAntInitialHeading = Heading::North;

inline Heading turn_right(Heading h) {
    return static_cast<Heading>((static_cast<int>(h) + 1) % 4);
}
inline Heading turn_left(Heading h) {
    return static_cast<Heading>((static_cast<int>(h) + 3) % 4);
}

struct AntState {
    Grid colors;  ///< binary field
    int row = 0;
    int col = 0;
    Heading heading = kAntInitialHeading;
};

/// One iteration: turn right on a 0 cell and left on a 1 cell, flip the
/// cell, step forward. With dead (fixed) boundaries a step off the field
/// raises AntOutOfBounds; a toroidal field wraps.
inline AntState ant_steps(const AntState& start, long n,
                          Boundary boundary = kAntDefaultBoundary) {
    if (n < 0) throw DataError("step count must be non-negative");
    if (!start.colors.in_bounds(start.row, start.col))
        throw AntOutOfBounds(0);
    for (CellValue v : start.colors.cells())
        if (v > 1) throw NonBinaryCell("ant fields are binary");

    AntState s = start;
    const int rows = s.colors.rows(), cols = s.colors.cols();
    for (long step = 1; step <= n; ++step) {
        const CellValue color = s.colors.at(s.row, s.col);
        s.heading = color == 0 ? turn_right(s.heading) : turn_left(s.heading);
        s.colors.set(s.row, s.col, color ^ 1);
        switch (s.heading) {
            case Heading::North: --s.row; break;
            case Heading::South: ++s.row; break;
            case Heading::East: ++s.col; break;
            case Heading::West: --s.col; break;
        }
        if (!s.colors.in_bounds(s.row, s.col)) {
            if (boundary == Boundary::FixedDead) throw AntOutOfBounds(step);
            s.row = (s.row + rows) % rows;
            s.col = (s.col + cols) % cols;
        }
    }
    return s;
}

/// The agent renders as value 2 on top of the binary field.
inline constexpr CellValue kAntMarker = 2;

inline Grid ant_overlay(const AntState& s) {
    Grid g = s.colors;
    g.set(s.row, s.col, kAntMarker);
    return g;
}

/// (input, output) grids: the field with the ant at its start, and the
/// field after n steps with the ant at its final cell.
inline std::pair<Grid, Grid> ant_task_grids(const AntState& start, long n,
                                            Boundary boundary = kAntDefaultBoundary) {
    const AntState end = ant_steps(start, n, boundary);
    return {ant_overlay(start), ant_overlay(end)};
}

}  // namespace gridbench
