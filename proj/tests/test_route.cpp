#include <catch2/catch_amalgamated.hpp>

#include <queue>

#include "gridbench/maze.hpp"
#include "gridbench/path.hpp"

#include "support.hpp"

using namespace gridbench;

namespace {

GridPoint find_value(const Grid& g, CellValue v) {
    for (int r = 0; r < g.rows(); ++r)
        for (int c = 0; c < g.cols(); ++c)
            if (g.at(r, c) == v) return {r, c};
    return {-1, -1};
}

// unit-weight Dijkstra with a priority queue; independent of the BFS path
int dijkstra_cells(const Grid& g, GridPoint src, GridPoint dst) {
    const int cols = g.cols();
    std::vector<int> dist(static_cast<std::size_t>(g.rows()) * cols, -1);
    using Entry = std::pair<int, int>;  // (distance, index)
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> pq;
    const int start = src.first * cols + src.second;
    dist[start] = 0;
    pq.push({0, start});
    while (!pq.empty()) {
        auto [d, cur] = pq.top();
        pq.pop();
        if (d != dist[cur]) continue;
        const int r = cur / cols, c = cur % cols;
        const int dd[4][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
        for (auto& step : dd) {
            const int nr = r + step[0], nc = c + step[1];
            if (!g.in_bounds(nr, nc) || g.at(nr, nc) == kRouteWall) continue;
            const int idx = nr * cols + nc;
            if (dist[idx] < 0 || d + 1 < dist[idx]) {
                dist[idx] = d + 1;
                pq.push({d + 1, idx});
            }
        }
    }
    const int d = dist[dst.first * cols + dst.second];
    return d < 0 ? -1 : d + 1;  // cell count including endpoints
}

// spanning-tree audit over the carved lattice region
void audit_perfect_maze(const MazeInstance& inst) {
    const Grid& g = inst.grid;
    const int pad = inst.pad;
    const int lat_h = 2 * inst.cells_h + 1, lat_w = 2 * inst.cells_w + 1;
    int open_cells = 0, adjacencies = 0;
    for (int r = pad; r < pad + lat_h; ++r) {
        for (int c = pad; c < pad + lat_w; ++c) {
            if (g.at(r, c) == kRouteWall) continue;
            ++open_cells;
            if (c + 1 < pad + lat_w && g.at(r, c + 1) != kRouteWall) ++adjacencies;
            if (r + 1 < pad + lat_h && g.at(r + 1, c) != kRouteWall) ++adjacencies;
        }
    }
    // a connected graph with edges = nodes - 1 is a tree
    REQUIRE(adjacencies == open_cells - 1);
    const auto route = bfs_shortest(g, find_value(g, kRouteStart), find_value(g, kRouteGoal));
    REQUIRE(route.has_value());
}

}  // namespace

TEST_CASE("single-cell maze is trivially connected") {
    MazeInstance inst = gen_maze(1, 1, 0, 3);
    CHECK(inst.grid.rows() == 3);
    CHECK(inst.grid.at(1, 1) != kRouteWall);
    CHECK(inst.solution == inst.grid);  // start adjacent to goal, nothing to mark
}

TEST_CASE("maze generation is deterministic per seed") {
    CHECK(gen_maze(10, 10, 0, 77).grid == gen_maze(10, 10, 0, 77).grid);
    CHECK(gen_maze(10, 10, 0, 77).grid != gen_maze(10, 10, 0, 78).grid);
}

TEST_CASE("mazes are perfect and solvable") {
    for (int i = 0; i < 500; ++i) {
        audit_perfect_maze(gen_maze(10, 10, 0, derive_stream(1000, i)));
        audit_perfect_maze(gen_maze(6, 6, 4, derive_stream(2000, i)));
    }
}

TEST_CASE("walling any route cell disconnects a maze") {
    // the corridor graph is a tree, so the marked route is the only one
    for (int i = 0; i < 5; ++i) {
        MazeInstance inst = gen_maze(10, 10, 0, derive_stream(4000, i));
        const GridPoint src = find_value(inst.grid, kRouteStart);
        const GridPoint dst = find_value(inst.grid, kRouteGoal);
        for (int r = 0; r < inst.solution.rows(); ++r)
            for (int c = 0; c < inst.solution.cols(); ++c) {
                if (inst.solution.at(r, c) != kRoutePath) continue;
                Grid blocked = inst.grid;
                blocked.set(r, c, kRouteWall);
                REQUIRE_FALSE(bfs_shortest(blocked, src, dst).has_value());
            }
    }
}

TEST_CASE("maze layout presets match the bundled canvases") {
    MazeInstance base = gen_maze(10, 10, 0, 5);
    CHECK(base.grid.rows() == 21);
    CHECK(base.grid.cols() == 21);
    CHECK(base.grid.at(1, 1) == kRouteStart);
    CHECK(base.grid.at(19, 19) == kRouteGoal);

    MazeInstance small = gen_maze(6, 6, 4, 5);
    CHECK(small.grid.rows() == 21);
    CHECK(small.grid.at(5, 5) == kRouteStart);
    CHECK(small.grid.at(15, 15) == kRouteGoal);
    // padding ring reads as background, the lattice border as wall
    CHECK(small.grid.at(0, 0) == kRouteOpen);
    CHECK(small.grid.at(4, 4) == kRouteWall);
}

TEST_CASE("maze solutions validate with ratio one") {
    for (int i = 0; i < 20; ++i) {
        MazeInstance inst = gen_maze(10, 10, 0, derive_stream(3000, i));
        const PathCheck check = validate_path(inst.grid, inst.solution);
        REQUIRE(check.valid);
        const auto route = bfs_shortest(inst.grid, find_value(inst.grid, kRouteStart),
                                        find_value(inst.grid, kRouteGoal));
        CHECK(check.length == static_cast<int>(route->size()));
    }
}

TEST_CASE("the bundled maze pairs are consistent") {
    for (const char* stem : {"maze", "maze_small"}) {
        Grid input = load_fixture_grid(std::string(stem) + "_input");
        Grid output = load_fixture_grid(std::string(stem) + "_output");
        const PathCheck check = validate_path(input, output);
        REQUIRE(check.valid);
        const auto route = bfs_shortest(input, find_value(input, kRouteStart),
                                        find_value(input, kRouteGoal));
        REQUIRE(route.has_value());
        CHECK(check.length == static_cast<int>(route->size()));
    }
}

TEST_CASE("bfs handles straight corridors and the degenerate case") {
    Grid corridor(1, 5, kRouteOpen);
    auto route = bfs_shortest(corridor, {0, 0}, {0, 4});
    REQUIRE(route.has_value());
    CHECK(route->size() == 5);

    auto self = bfs_shortest(corridor, {0, 2}, {0, 2});
    REQUIRE(self.has_value());
    CHECK(self->size() == 1);

    Grid blocked = Grid::from_rows({{1, 0, 1}});
    CHECK_FALSE(bfs_shortest(blocked, {0, 0}, {0, 2}).has_value());
    CHECK_THROWS_AS(bfs_shortest(blocked, {0, 1}, {0, 2}), CellNotOpen);
}

TEST_CASE("bfs lengths match unit-weight Dijkstra on random fields") {
    Rng rng(606);
    int compared = 0;
    for (int i = 0; i < 500; ++i) {
        PathInstance inst = gen_shortest_path(15, 15, 0.25, derive_stream(42, i));
        const GridPoint src = find_value(inst.grid, kRouteStart);
        const GridPoint dst = find_value(inst.grid, kRouteGoal);
        const auto route = bfs_shortest(inst.grid, src, dst);
        REQUIRE(route.has_value());
        REQUIRE(static_cast<int>(route->size()) == dijkstra_cells(inst.grid, src, dst));
        ++compared;
    }
    CHECK(compared == 500);
    (void)rng;
}

TEST_CASE("the bundled shortest-path pair is minimal") {
    Grid input = load_fixture_grid("shortest_path_input");
    Grid output = load_fixture_grid("shortest_path_output");
    const PathCheck check = validate_path(input, output);
    REQUIRE(check.valid);
    const auto route = bfs_shortest(input, find_value(input, kRouteStart),
                                    find_value(input, kRouteGoal));
    CHECK(check.length == static_cast<int>(route->size()));
}

TEST_CASE("path validation rejects broken predictions") {
    Grid input = Grid::from_rows({{0, 0, 0, 0, 0},
                                  {0, 3, 1, 1, 0},
                                  {0, 1, 0, 1, 0},
                                  {0, 1, 1, 2, 0},
                                  {0, 0, 0, 0, 0}});
    Grid good = input;
    good.set(1, 2, kRoutePath);
    good.set(1, 3, kRoutePath);
    good.set(2, 3, kRoutePath);
    CHECK(validate_path(input, good).valid);
    CHECK(validate_path(input, good).length == 5);

    Grid diagonal = input;  // gap between (1,2) and (2,3)
    diagonal.set(1, 2, kRoutePath);
    diagonal.set(2, 3, kRoutePath);
    CHECK_FALSE(validate_path(input, diagonal).valid);

    Grid through_wall = input;
    through_wall.set(2, 2, kRoutePath);  // wall cell
    CHECK_FALSE(validate_path(input, through_wall).valid);

    Grid branching = good;
    branching.set(2, 1, kRoutePath);  // dead side arm off the source
    CHECK_FALSE(validate_path(input, branching).valid);

    CHECK_THROWS_AS(validate_path(input, Grid(3, 3)), DimensionMismatch);
    CHECK_THROWS_AS(validate_path(Grid(5, 5, kRouteOpen), input), EncodingError);
}

TEST_CASE("gold solutions score perfect metrics") {
    std::vector<PathEvalCase> cases;
    for (int i = 0; i < 25; ++i) {
        PathInstance inst = gen_shortest_path(15, 15, 0.2, derive_stream(9, i));
        cases.push_back({inst.grid, inst.solution, inst.solution});
    }
    const PathMetrics m = compute_metrics(cases);
    CHECK(m.n_total == 25);
    CHECK(m.n_valid == 25);
    CHECK(m.psr == 1.0);
    REQUIRE(m.rpl_mean.has_value());
    CHECK(*m.rpl_mean == 1.0);
}

TEST_CASE("detours count toward RPL but not PSR") {
    // open 5x5 interior: straight route length 3, detour length 5
    Grid input = Grid::from_rows({{0, 0, 0, 0, 0},
                                  {0, 3, 1, 2, 0},
                                  {0, 1, 1, 1, 0},
                                  {0, 1, 1, 1, 0},
                                  {0, 0, 0, 0, 0}});
    Grid straight = input;
    straight.set(1, 2, kRoutePath);

    Grid detour = input;
    detour.set(2, 1, kRoutePath);
    detour.set(2, 2, kRoutePath);
    detour.set(2, 3, kRoutePath);

    const PathMetrics m = compute_metrics({{input, straight, straight},
                                           {input, straight, detour}});
    CHECK(m.n_total == 2);
    CHECK(m.n_valid == 2);
    CHECK(m.psr == 1.0);
    REQUIRE(m.rpl_mean.has_value());
    // ratios 3/3 and 5/3
    CHECK_THAT(*m.rpl_mean, Catch::Matchers::WithinAbs((1.0 + 5.0 / 3.0) / 2.0, 1e-12));
}

TEST_CASE("invalid predictions lower PSR and are excluded from RPL") {
    Grid input = Grid::from_rows({{0, 0, 0, 0},
                                  {0, 3, 1, 0},
                                  {0, 1, 2, 0},
                                  {0, 0, 0, 0}});
    Grid good = input;
    good.set(1, 2, kRoutePath);
    Grid bad = input;  // no marks, source not adjacent to target? it is adjacent
    // make a prediction with a stray mark far from the chain
    bad.set(2, 1, kRoutePath);
    bad.set(1, 2, kRoutePath);

    const PathMetrics m = compute_metrics({{input, good, good}, {input, good, bad}});
    CHECK(m.n_total == 2);
    CHECK(m.n_valid == 1);
    CHECK(m.psr == 0.5);
    REQUIRE(m.rpl_mean.has_value());
    CHECK(*m.rpl_mean == 1.0);
}

TEST_CASE("an unobstructed field yields taxicab-length routes") {
    for (int i = 0; i < 20; ++i) {
        PathInstance inst = gen_shortest_path(15, 15, 0.0, derive_stream(77, i));
        const GridPoint src = find_value(inst.grid, kRouteStart);
        const GridPoint dst = find_value(inst.grid, kRouteGoal);
        const PathCheck check = validate_path(inst.grid, inst.solution);
        REQUIRE(check.valid);
        const int taxicab =
            std::abs(src.first - dst.first) + std::abs(src.second - dst.second) + 1;
        CHECK(check.length == taxicab);
        const PathMetrics m = compute_metrics({{inst.grid, inst.solution, inst.solution}});
        CHECK(*m.rpl_mean == 1.0);
    }
}

TEST_CASE("generator rejects bad parameters") {
    CHECK_THROWS_AS(gen_shortest_path(15, 15, 0.9, 1), DataError);
    CHECK_THROWS_AS(gen_shortest_path(2, 2, 0.1, 1), BadDimensions);
    CHECK(gen_shortest_path(15, 15, 0.25, 4).grid ==
          gen_shortest_path(15, 15, 0.25, 4).grid);
}
