#pragma once

#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "gridbench/automata.hpp"
#include "gridbench/chess.hpp"
#include "gridbench/connect4.hpp"
#include "gridbench/dataset.hpp"
#include "gridbench/errors.hpp"
#include "gridbench/hitori.hpp"
#include "gridbench/maze.hpp"
#include "gridbench/palette.hpp"
#include "gridbench/path.hpp"
#include "gridbench/rng.hpp"
#include "gridbench/sudoku.hpp"

namespace gridbench {

enum class TaskKind {
    Sudoku,
    SudokuMini,
    Hitori,
    Connect4,
    Chess,
    Maze,
    MazeSmall,
    ShortestPath,
    Eca,
    Life,
    Ant,
};

inline const std::vector<std::pair<TaskKind, const char*>>& task_names() {
    static const std::vector<std::pair<TaskKind, const char*>> names = {
        {TaskKind::Sudoku, "sudoku"},
        {TaskKind::SudokuMini, "sudoku_mini"},
        {TaskKind::Hitori, "hitori"},
        {TaskKind::Connect4, "connect4"},
        {TaskKind::Chess, "chess"},
        {TaskKind::Maze, "maze"},
        {TaskKind::MazeSmall, "maze_small"},
        {TaskKind::ShortestPath, "shortest_path"},
        {TaskKind::Eca, "eca"},
        {TaskKind::Life, "life"},
        {TaskKind::Ant, "ant"},
    };
    return names;
}

inline const char* task_name(TaskKind kind) {
    for (const auto& [k, name] : task_names())
        if (k == kind) return name;
    throw DataError("unknown task kind");
}

inline TaskKind task_from_name(const std::string& name) {
    for (const auto& [k, n] : task_names())
        if (name == n) return k;
    throw DataError("unknown task '" + name + "'");
}

/// Whether predictions for this family are scored with route metrics in
/// addition to exact match.
inline bool is_route_task(TaskKind kind) {
    return kind == TaskKind::Maze || kind == TaskKind::MazeSmall ||
           kind == TaskKind::ShortestPath;
}

/// Family rendering conventions: boards draw separator lines, fields and
/// mazes do not.
struct FamilyDefaults {
    std::string palette;
    RenderSpec render;
};

inline FamilyDefaults family_defaults(TaskKind kind) {
    const RenderSpec lined{.cell_px = 16, .gridline_px = 1, .gridline_rgb = {120, 120, 120}};
    const RenderSpec plain{.cell_px = 16, .gridline_px = 0};
    switch (kind) {
        case TaskKind::Sudoku:
        case TaskKind::SudokuMini: return {"sudoku", lined};
        case TaskKind::Hitori: return {"hitori", lined};
        case TaskKind::Connect4: return {"connect4", lined};
        case TaskKind::Chess: return {"chess", lined};
        case TaskKind::Maze:
        case TaskKind::MazeSmall:
        case TaskKind::ShortestPath: return {"maze", plain};
        case TaskKind::Eca: return {"eca", plain};
        case TaskKind::Life: return {"binary", plain};
        case TaskKind::Ant: return {"ant", plain};
    }
    throw DataError("unknown task kind");
}

/// Knobs for instance generation; zero/empty fields fall back to the
/// family defaults listed alongside each member.
struct GenOptions {
    // sudoku
    int sudoku_clues = 0;  ///< default 40 (9x9) or 8 (4x4)
    // maze
    int maze_cells_w = 0;  ///< default 10 (maze) or 6 (maze_small)
    int maze_cells_h = 0;
    int maze_pad = -1;     ///< default 0 (maze) or 4 (maze_small)
    // shortest path
    int field_width = 15;
    int field_height = 15;
    double density = -1.0;  ///< obstacles (default 0.25) or fill (default 0.35)
    // one-dimensional automata
    int eca_rule = 110;
    int eca_width = 16;
    int steps = -1;  ///< evolution steps: default 7 (eca), 1 (life), 2 (ant)
    // two-dimensional automata
    std::string life_rule = "B3/S23";
    int field_rows = 8;
    int field_cols = 8;
    std::optional<Boundary> boundary;  ///< default per engine calibration
    // chess
    std::vector<std::string> fen_list;
};

namespace detail_tasks {

inline Grid random_binary_field(Rng& rng, int rows, int cols, double density) {
    Grid g(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (rng.chance(density)) g.set(r, c, 1);
    return g;
}

inline std::string instance_id(TaskKind kind, int index) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%s-%05d", task_name(kind), index);
    return buf;
}

}  // namespace detail_tasks

/// Generate instance `index` of a run. Every instance draws from its own
/// counter-derived stream, so the result depends on (seed, index) only.
inline TaskInstance generate_instance(TaskKind kind, const GenOptions& opt, std::uint64_t seed,
                                      int index) {
    const std::uint64_t stream = derive_stream(seed, static_cast<std::uint64_t>(index));
    TaskInstance inst;
    inst.id = detail_tasks::instance_id(kind, index);
    inst.seed = stream;

    switch (kind) {
        case TaskKind::Sudoku:
        case TaskKind::SudokuMini: {
            const int size = kind == TaskKind::Sudoku ? 9 : 4;
            const int clues = opt.sudoku_clues > 0 ? opt.sudoku_clues : (size == 9 ? 40 : 8);
            SudokuInstance s = gen_sudoku(size, clues, stream);
            inst.input = std::move(s.givens);
            inst.output = std::move(s.solution);
            break;
        }
        case TaskKind::Hitori: {
            HitoriInstance h = gen_hitori(stream);
            inst.input = std::move(h.numbers);
            inst.output = std::move(h.shade_mask);
            break;
        }
        case TaskKind::Connect4: {
            Connect4Instance c = gen_connect4(stream);
            inst.input = c.board;
            inst.output = apply_c4_move(c.board, c.mover, c.winning_column);
            break;
        }
        case TaskKind::Chess: {
            int found = 0;
            for (const std::string& fen : opt.fen_list) {
                std::optional<chess::ChessInstance> ci;
                try {
                    ci = chess::instance_from_fen(fen);
                } catch (const DataError&) {
                    continue;  // unparsable or not white to move: filtered out
                }
                if (!ci) continue;
                if (found == index) {
                    auto [in, out] = chess::encode_chess_pair(*ci);
                    inst.input = std::move(in);
                    inst.output = std::move(out);
                    return inst;
                }
                ++found;
            }
            throw GenerationExhausted("FEN list has fewer than " + std::to_string(index + 1) +
                                      " mate-in-1 positions");
        }
        case TaskKind::Maze:
        case TaskKind::MazeSmall: {
            const bool small = kind == TaskKind::MazeSmall;
            const int cw = opt.maze_cells_w > 0 ? opt.maze_cells_w : (small ? 6 : 10);
            const int ch = opt.maze_cells_h > 0 ? opt.maze_cells_h : (small ? 6 : 10);
            const int pad = opt.maze_pad >= 0 ? opt.maze_pad : (small ? 4 : 0);
            MazeInstance m = gen_maze(cw, ch, pad, stream);
            inst.input = std::move(m.grid);
            inst.output = std::move(m.solution);
            break;
        }
        case TaskKind::ShortestPath: {
            const double density = opt.density >= 0 ? opt.density : 0.25;
            PathInstance p = gen_shortest_path(opt.field_width, opt.field_height, density, stream);
            inst.input = std::move(p.grid);
            inst.output = std::move(p.solution);
            break;
        }
        case TaskKind::Eca: {
            Rng rng(stream);
            BitRow row(opt.eca_width);
            for (auto& b : row) b = static_cast<std::uint8_t>(rng.below(2));
            const int steps = opt.steps >= 0 ? opt.steps : 7;
            auto [in, out] = eca_task_grids(row, EcaRule(opt.eca_rule), steps,
                                            opt.boundary.value_or(kEcaDefaultBoundary));
            inst.input = std::move(in);
            inst.output = std::move(out);
            break;
        }
        case TaskKind::Life: {
            Rng rng(stream);
            const double density = opt.density >= 0 ? opt.density : 0.35;
            const LifeRule rule = parse_bs(opt.life_rule);
            const Boundary boundary = opt.boundary.value_or(kLifeDefaultBoundary);
            Grid field =
                detail_tasks::random_binary_field(rng, opt.field_rows, opt.field_cols, density);
            Grid next = field;
            const int steps = opt.steps >= 0 ? opt.steps : 1;
            for (int s = 0; s < steps; ++s) next = life_step(next, rule, boundary);
            inst.input = std::move(field);
            inst.output = std::move(next);
            break;
        }
        case TaskKind::Ant: {
            const double density = opt.density >= 0 ? opt.density : 0.4;
            const long horizon = opt.steps >= 0 ? opt.steps : 2;
            const Boundary boundary = opt.boundary.value_or(kAntDefaultBoundary);
            // resample until the walk stays inside a fixed field
            for (int attempt = 0; attempt < 200; ++attempt) {
                Rng rng(derive_stream(stream, static_cast<std::uint64_t>(attempt)));
                Grid field = detail_tasks::random_binary_field(rng, opt.field_rows,
                                                               opt.field_cols, density);
                AntState start{field, opt.field_rows / 2, opt.field_cols / 2,
                               kAntInitialHeading};
                start.colors.set(start.row, start.col, 0);
                try {
                    auto [in, out] = ant_task_grids(start, horizon, boundary);
                    inst.input = std::move(in);
                    inst.output = std::move(out);
                    return inst;
                } catch (const AntOutOfBounds&) {
                    continue;
                }
            }
            throw GenerationExhausted("ant keeps walking off the field");
        }
    }
    return inst;
}

/// Generate a whole run of instances.
inline std::vector<TaskInstance> generate_run(TaskKind kind, const GenOptions& opt,
                                              std::uint64_t seed, int count) {
    if (count < 1) throw DataError("instance count must be positive");
    std::vector<TaskInstance> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) out.push_back(generate_instance(kind, opt, seed, i));
    return out;
}

}  // namespace gridbench
