#pragma once

#include <array>
#include <vector>

#include "gridbench/errors.hpp"
#include "gridbench/grid.hpp"
#include "gridbench/rng.hpp"

namespace gridbench {

/// 5x5 number grid with its unique shading mask (0 unshaded, 1 shaded).
struct HitoriInstance {
    Grid numbers;
    Grid shade_mask;
};

inline constexpr int kHitoriSide = 5;

namespace detail_hitori {

inline void check_numbers(const Grid& numbers) {
    if (numbers.rows() != kHitoriSide || numbers.cols() != kHitoriSide)
        throw BadDimensions("hitori boards are 5x5");
    for (CellValue v : numbers.cells())
        if (v < 1 || v > 5) throw ValueOutOfRange(v);
}

/// Unshaded cells form one 4-connected component.
inline bool unshaded_connected(const std::array<bool, 25>& shaded) {
    int start = -1, open_count = 0;
    for (int i = 0; i < 25; ++i) {
        if (!shaded[i]) {
            ++open_count;
            if (start < 0) start = i;
        }
    }
    if (open_count == 0) return false;
    std::array<bool, 25> seen{};
    std::array<int, 25> stack;
    int top = 0;
    stack[top++] = start;
    seen[start] = true;
    int reached = 0;
    while (top > 0) {
        const int cur = stack[--top];
        ++reached;
        const int r = cur / 5, c = cur % 5;
        const int nbrs[4][2] = {{r - 1, c}, {r + 1, c}, {r, c - 1}, {r, c + 1}};
        for (const auto& n : nbrs) {
            if (n[0] < 0 || n[0] >= 5 || n[1] < 0 || n[1] >= 5) continue;
            const int idx = n[0] * 5 + n[1];
            if (!shaded[idx] && !seen[idx]) {
                seen[idx] = true;
                stack[top++] = idx;
            }
        }
    }
    return reached == open_count;
}

}  // namespace detail_hitori

/// Exhaustive search for every mask satisfying the three rules:
/// unshaded numbers unique per row and column, no two shaded cells
/// orthogonally adjacent, unshaded cells one connected component.
/// Cell-by-cell DFS; duplicate and adjacency violations prune early,
/// connectivity is checked on complete masks. Empty result = unsolvable.
inline std::vector<Grid> solve_hitori(const Grid& numbers, int cap = 1 << 30) {
    detail_hitori::check_numbers(numbers);
    std::vector<Grid> solutions;
    std::array<bool, 25> shaded{};
    // seen_row[r][v], seen_col[c][v]: an unshaded v already placed
    std::array<std::array<bool, 6>, 5> seen_row{}, seen_col{};

    auto rec = [&](auto&& self, int idx) -> void {
        if (static_cast<int>(solutions.size()) >= cap) return;
        if (idx == 25) {
            if (!detail_hitori::unshaded_connected(shaded)) return;
            Grid mask(5, 5);
            for (int i = 0; i < 25; ++i)
                if (shaded[i]) mask.set(i / 5, i % 5, 1);
            solutions.push_back(std::move(mask));
            return;
        }
        const int r = idx / 5, c = idx % 5;
        const int v = numbers.at(r, c);

        // leave unshaded when no duplicate above or to the left
        if (!seen_row[r][v] && !seen_col[c][v]) {
            seen_row[r][v] = seen_col[c][v] = true;
            self(self, idx + 1);
            seen_row[r][v] = seen_col[c][v] = false;
        }
        // shade when no orthogonal neighbor is already shaded
        const bool up_shaded = r > 0 && shaded[idx - 5];
        const bool left_shaded = c > 0 && shaded[idx - 1];
        if (!up_shaded && !left_shaded) {
            shaded[idx] = true;
            self(self, idx + 1);
            shaded[idx] = false;
        }
    };
    rec(rec, 0);
    return solutions;
}

/// Generate an instance with exactly one valid mask. Works backwards from a
/// random valid mask: row/column-unique numbers go on unshaded cells,
/// duplicate-inducing numbers on shaded cells, then a full search confirms
/// the mask is the only solution. Deterministic per seed.
inline HitoriInstance gen_hitori(std::uint64_t seed, int max_tries = 4000) {
    Rng rng(seed);
    for (int attempt = 0; attempt < max_tries; ++attempt) {
        // 1. sample a mask that satisfies adjacency + connectivity
        std::array<bool, 25> shaded{};
        const int target = 4 + rng.below_int(4);  // 4..7 shaded cells
        int placed = 0;
        for (int tries = 0; tries < 60 && placed < target; ++tries) {
            const int idx = rng.below_int(25);
            if (shaded[idx]) continue;
            const int r = idx / 5, c = idx % 5;
            const bool adjacent = (r > 0 && shaded[idx - 5]) || (r < 4 && shaded[idx + 5]) ||
                                  (c > 0 && shaded[idx - 1]) || (c < 4 && shaded[idx + 1]);
            if (adjacent) continue;
            shaded[idx] = true;
            if (detail_hitori::unshaded_connected(shaded)) {
                ++placed;
            } else {
                shaded[idx] = false;
            }
        }
        if (placed == 0) continue;

        // 2. fill unshaded cells with row/column-unique numbers
        Grid numbers(5, 5);
        std::array<std::array<bool, 6>, 5> used_row{}, used_col{};
        bool ok = true;
        auto fill = [&](auto&& self, int idx) -> bool {
            if (idx == 25) return true;
            if (shaded[idx]) return self(self, idx + 1);
            const int r = idx / 5, c = idx % 5;
            std::vector<std::uint8_t> vals = {1, 2, 3, 4, 5};
            rng.shuffle(vals);
            for (std::uint8_t v : vals) {
                if (used_row[r][v] || used_col[c][v]) continue;
                used_row[r][v] = used_col[c][v] = true;
                numbers.set(r, c, v);
                if (self(self, idx + 1)) return true;
                used_row[r][v] = used_col[c][v] = false;
            }
            return false;
        };
        if (!fill(fill, 0)) continue;

        // 3. shaded cells duplicate an unshaded value from their row or column
        for (int idx = 0; idx < 25 && ok; ++idx) {
            if (!shaded[idx]) continue;
            const int r = idx / 5, c = idx % 5;
            std::vector<std::uint8_t> options;
            for (int i = 0; i < 5; ++i) {
                if (i != c && !shaded[r * 5 + i]) options.push_back(numbers.at(r, i));
                if (i != r && !shaded[i * 5 + c]) options.push_back(numbers.at(i, c));
            }
            if (options.empty()) {
                ok = false;
                break;
            }
            numbers.set(r, c, options[rng.below(options.size())]);
        }
        if (!ok) continue;

        // 4. accept only if the sampled mask is the unique solution
        auto solutions = solve_hitori(numbers, 2);
        if (solutions.size() != 1) continue;
        Grid mask(5, 5);
        for (int i = 0; i < 25; ++i)
            if (shaded[i]) mask.set(i / 5, i % 5, 1);
        if (solutions[0] != mask) continue;
        return HitoriInstance{std::move(numbers), std::move(mask)};
    }
    throw GenerationExhausted("no unique hitori instance found within " +
                              std::to_string(max_tries) + " tries");
}

}  // namespace gridbench
