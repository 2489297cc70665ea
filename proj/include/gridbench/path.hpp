#pragma once

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <utility>
#include <vector>

#include "gridbench/errors.hpp"
#include "gridbench/grid.hpp"
#include "gridbench/maze.hpp"
#include "gridbench/rng.hpp"

namespace gridbench {

using GridPoint = std::pair<int, int>;

/// Breadth-first shortest route between two non-wall cells, moving up,
/// down, left, right. Neighbors expand in exactly that order, which fixes
/// the tie-break; reconstruction follows parents back from the target.
/// Returns the cell sequence including both endpoints, or nothing when the
/// cells are disconnected.
inline std::optional<std::vector<GridPoint>> bfs_shortest(const Grid& grid, GridPoint src,
                                                          GridPoint dst) {
    if (!grid.in_bounds(src.first, src.second) || grid.at(src.first, src.second) == kRouteWall)
        throw CellNotOpen("source cell is not open");
    if (!grid.in_bounds(dst.first, dst.second) || grid.at(dst.first, dst.second) == kRouteWall)
        throw CellNotOpen("target cell is not open");

    const int cols = grid.cols();
    std::vector<int> parent(static_cast<std::size_t>(grid.rows()) * cols, -1);
    std::vector<int> queue;
    const int start = src.first * cols + src.second;
    const int goal = dst.first * cols + dst.second;
    parent[start] = start;
    queue.push_back(start);
    for (std::size_t head = 0; head < queue.size() && parent[goal] < 0; ++head) {
        const int cur = queue[head];
        const int r = cur / cols, c = cur % cols;
        static constexpr int dirs[4][2] = {{-1, 0}, {1, 0}, {0, -1}, {0, 1}};  // U D L R
        for (const auto& d : dirs) {
            const int nr = r + d[0], nc = c + d[1];
            if (!grid.in_bounds(nr, nc) || grid.at(nr, nc) == kRouteWall) continue;
            const int idx = nr * cols + nc;
            if (parent[idx] >= 0) continue;
            parent[idx] = cur;
            queue.push_back(idx);
        }
    }
    if (parent[goal] < 0) return std::nullopt;
    std::vector<GridPoint> path;
    for (int cur = goal;; cur = parent[cur]) {
        path.emplace_back(cur / cols, cur % cols);
        if (cur == start) break;
    }
    std::reverse(path.begin(), path.end());
    return path;
}

/// Open field with a wall border, random obstacles, and a marked shortest
/// route between two sampled endpoints.
struct PathInstance {
    Grid grid;      ///< {0 wall, 1 open, 3 source, 2 target}
    Grid solution;  ///< route cells marked 4
};

/// Obstacles fall uniformly at `obstacle_density`; endpoint pairs resample
/// until connected. Deterministic per seed.
inline PathInstance gen_shortest_path(int width, int height, double obstacle_density,
                                      std::uint64_t seed, int max_tries = 500) {
    if (width < 3 || height < 3) throw BadDimensions("field too small for a wall border");
    if (width > kMaxSide || height > kMaxSide)
        throw BadDimensions("field exceeds the maximum grid side");
    if (obstacle_density < 0.0 || obstacle_density > 0.45)
        throw DataError("obstacle density must lie in [0, 0.45]");

    Rng rng(seed);
    for (int attempt = 0; attempt < max_tries; ++attempt) {
        Grid grid(height, width, kRouteWall);
        std::vector<GridPoint> open;
        for (int r = 1; r < height - 1; ++r) {
            for (int c = 1; c < width - 1; ++c) {
                if (rng.chance(obstacle_density)) continue;
                grid.set(r, c, kRouteOpen);
                open.emplace_back(r, c);
            }
        }
        if (open.size() < 2) continue;
        const GridPoint src = open[rng.below(open.size())];
        GridPoint dst = open[rng.below(open.size())];
        if (src == dst) continue;
        const auto route = bfs_shortest(grid, src, dst);
        if (!route) continue;

        grid.set(src.first, src.second, kRouteStart);
        grid.set(dst.first, dst.second, kRouteGoal);
        Grid solution = grid;
        for (std::size_t i = 1; i + 1 < route->size(); ++i)
            solution.set((*route)[i].first, (*route)[i].second, kRoutePath);
        return PathInstance{std::move(grid), std::move(solution)};
    }
    throw GenerationExhausted("no connected endpoint pair found");
}

struct PathCheck {
    bool valid = false;
    int length = 0;  ///< cell count including both endpoints, when valid
};

/// A prediction is valid when its marked cells, together with the source
/// and target from the input grid, form one simple 4-connected chain from
/// source to target over cells that are open in the input. Marks on walls
/// or branching marks invalidate; they are not errors.
inline PathCheck validate_path(const Grid& input, const Grid& predicted) {
    if (input.rows() != predicted.rows() || input.cols() != predicted.cols())
        throw DimensionMismatch("input and prediction differ in size");

    GridPoint src{-1, -1}, dst{-1, -1};
    int n_src = 0, n_dst = 0;
    for (int r = 0; r < input.rows(); ++r) {
        for (int c = 0; c < input.cols(); ++c) {
            if (input.at(r, c) == kRouteStart) {
                src = {r, c};
                ++n_src;
            } else if (input.at(r, c) == kRouteGoal) {
                dst = {r, c};
                ++n_dst;
            }
        }
    }
    if (n_src != 1 || n_dst != 1)
        throw EncodingError("input must mark exactly one source and one target");

    std::vector<GridPoint> nodes;
    for (int r = 0; r < input.rows(); ++r)
        for (int c = 0; c < input.cols(); ++c)
            if (predicted.at(r, c) == kRoutePath) {
                if (input.at(r, c) != kRouteOpen) return {};  // mark on a wall or endpoint
                nodes.emplace_back(r, c);
            }
    const int n_marks = static_cast<int>(nodes.size());
    nodes.push_back(src);
    nodes.push_back(dst);

    // a simple chain has endpoint degree 1, interior degree 2, and is one
    // connected piece; anything else is a fork, a gap or a stray mark
    auto adjacent = [](GridPoint a, GridPoint b) {
        return std::abs(a.first - b.first) + std::abs(a.second - b.second) == 1;
    };
    const int n = static_cast<int>(nodes.size());
    std::vector<std::vector<int>> nbrs(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (adjacent(nodes[i], nodes[j])) {
                nbrs[i].push_back(j);
                nbrs[j].push_back(i);
            }
    for (int i = 0; i < n_marks; ++i)
        if (nbrs[i].size() != 2) return {};
    if (nbrs[n_marks].size() != 1 || nbrs[n_marks + 1].size() != 1) return {};

    std::vector<bool> seen(n, false);
    std::vector<int> stack{n_marks};
    seen[n_marks] = true;
    int reached = 0;
    while (!stack.empty()) {
        const int cur = stack.back();
        stack.pop_back();
        ++reached;
        for (int nb : nbrs[cur])
            if (!seen[nb]) {
                seen[nb] = true;
                stack.push_back(nb);
            }
    }
    if (reached != n) return {};
    return PathCheck{true, n_marks + 2};
}

/// Aggregate route metrics over (input, gold, predicted) triples. The
/// success rate counts valid predictions over all pairs; the mean relative
/// length averages predicted/optimal only over the valid ones.
struct PathMetrics {
    double psr = 0.0;
    std::optional<double> rpl_mean;
    int n_valid = 0;
    int n_total = 0;
};

struct PathEvalCase {
    Grid input;
    Grid gold;
    Grid predicted;
};

inline PathMetrics compute_metrics(const std::vector<PathEvalCase>& cases) {
    PathMetrics m;
    m.n_total = static_cast<int>(cases.size());
    double ratio_sum = 0.0;
    for (const auto& ec : cases) {
        const PathCheck check = validate_path(ec.input, ec.predicted);
        if (!check.valid) continue;
        ++m.n_valid;
        GridPoint src{-1, -1}, dst{-1, -1};
        for (int r = 0; r < ec.input.rows(); ++r)
            for (int c = 0; c < ec.input.cols(); ++c) {
                if (ec.input.at(r, c) == kRouteStart) src = {r, c};
                if (ec.input.at(r, c) == kRouteGoal) dst = {r, c};
            }
        const auto best = bfs_shortest(ec.input, src, dst);
        if (!best) throw EncodingError("input grid has no route between its endpoints");
        ratio_sum += static_cast<double>(check.length) / static_cast<double>(best->size());
    }
    m.psr = m.n_total == 0 ? 0.0 : static_cast<double>(m.n_valid) / m.n_total;
    if (m.n_valid > 0) m.rpl_mean = ratio_sum / m.n_valid;
    return m;
}

}  // namespace gridbench
