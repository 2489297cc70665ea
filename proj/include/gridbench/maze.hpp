#pragma once

#include <vector>

#include "gridbench/errors.hpp"
#include "gridbench/grid.hpp"
#include "gridbench/rng.hpp"

namespace gridbench {

// Route-task cell values, shared by maze and shortest-path encodings.
inline constexpr CellValue kRouteWall = 0;
inline constexpr CellValue kRouteOpen = 1;
inline constexpr CellValue kRouteGoal = 2;
inline constexpr CellValue kRouteStart = 3;
inline constexpr CellValue kRoutePath = 4;

/// A perfect maze on a wall lattice: cells_w x cells_h corridor cells expand
/// to a (2h+1) x (2w+1) grid, optionally embedded in `pad` rings of
/// background (open-valued) cells so small mazes share a larger canvas.
/// The start is the top-left corridor cell, the goal the bottom-right one.
struct MazeInstance {
    Grid grid;      ///< walls/open with start 3 and goal 2
    Grid solution;  ///< same with the unique route marked 4
    int cells_w = 0;
    int cells_h = 0;
    int pad = 0;
};

/// Seeded recursive backtracker. The carved corridor graph is a spanning
/// tree, so exactly one path joins any two cells.
inline MazeInstance gen_maze(int cells_w, int cells_h, int pad, std::uint64_t seed) {
    if (cells_w < 1 || cells_h < 1) throw BadDimensions("maze needs at least one cell");
    if (pad < 0) throw BadDimensions("pad must be non-negative");
    const int lat_h = 2 * cells_h + 1;
    const int lat_w = 2 * cells_w + 1;
    const int rows = lat_h + 2 * pad;
    const int cols = lat_w + 2 * pad;
    if (rows > kMaxSide || cols > kMaxSide)
        throw BadDimensions("maze exceeds the maximum grid side");

    Rng rng(seed);
    std::vector<std::vector<bool>> visited(cells_h, std::vector<bool>(cells_w, false));
    Grid grid(rows, cols, kRouteOpen);  // background ring
    // wall out the lattice region, then carve
    for (int r = 0; r < lat_h; ++r)
        for (int c = 0; c < lat_w; ++c) grid.set(pad + r, pad + c, kRouteWall);

    auto open_cell = [&](int cr, int cc) { grid.set(pad + 2 * cr + 1, pad + 2 * cc + 1, kRouteOpen); };
    // the wall between two adjacent cells sits at the midpoint of their
    // lattice coordinates
    auto open_wall = [&](int lr1, int lc1, int lr2, int lc2) {
        grid.set(pad + (lr1 + lr2) / 2, pad + (lc1 + lc2) / 2, kRouteOpen);
    };

    std::vector<std::pair<int, int>> stack;
    stack.emplace_back(0, 0);
    visited[0][0] = true;
    open_cell(0, 0);
    while (!stack.empty()) {
        const auto [cr, cc] = stack.back();
        std::vector<std::pair<int, int>> next;
        static constexpr int dirs[4][2] = {{-1, 0}, {1, 0}, {0, -1}, {0, 1}};
        for (const auto& d : dirs) {
            const int nr = cr + d[0], nc = cc + d[1];
            if (nr >= 0 && nr < cells_h && nc >= 0 && nc < cells_w && !visited[nr][nc])
                next.emplace_back(nr, nc);
        }
        if (next.empty()) {
            stack.pop_back();
            continue;
        }
        const auto [nr, nc] = next[rng.below(next.size())];
        visited[nr][nc] = true;
        open_cell(nr, nc);
        open_wall(2 * cr + 1, 2 * cc + 1, 2 * nr + 1, 2 * nc + 1);
        stack.emplace_back(nr, nc);
    }

    const int start_r = pad + 1, start_c = pad + 1;
    const int goal_r = pad + lat_h - 2, goal_c = pad + lat_w - 2;
    grid.set(start_r, start_c, kRouteStart);
    grid.set(goal_r, goal_c, kRouteGoal);

    MazeInstance inst{grid, grid, cells_w, cells_h, pad};
    // mark the unique route (BFS; the corridor graph is a tree)
    std::vector<int> parent(static_cast<std::size_t>(rows) * cols, -1);
    std::vector<int> queue;
    queue.push_back(start_r * cols + start_c);
    parent[queue[0]] = queue[0];
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const int cur = queue[head];
        const int r = cur / cols, c = cur % cols;
        if (r == goal_r && c == goal_c) break;
        static constexpr int dirs[4][2] = {{-1, 0}, {1, 0}, {0, -1}, {0, 1}};
        for (const auto& d : dirs) {
            const int nr = r + d[0], nc = c + d[1];
            if (!grid.in_bounds(nr, nc) || grid.at(nr, nc) == kRouteWall) continue;
            // padding cells are open-valued but sealed off by the lattice border
            const int idx = nr * cols + nc;
            if (parent[idx] >= 0) continue;
            parent[idx] = cur;
            queue.push_back(idx);
        }
    }
    int cur = goal_r * cols + goal_c;
    if (parent[cur] < 0) throw Error("maze carve produced a disconnected grid");
    cur = parent[cur];
    while (cur != start_r * cols + start_c) {
        inst.solution.set(cur / cols, cur % cols, kRoutePath);
        cur = parent[cur];
    }
    return inst;
}

}  // namespace gridbench
