// gridbench: generate, render, export, decode and score grid-task datasets.
//
// Subcommands:
//   gen     write a dataset (image + JSON modalities, optional transition frames)
//   eval    score a prediction directory against a dataset or ARC task files
//   decode  print the grid behind a rendered PNG as canonical JSON
//   curve   accuracy-vs-n curves and samples-to-threshold tables from a CSV
//
// Exit codes: 0 ok, 1 usage, 2 data error, 3 I/O error.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "gridbench/dataset.hpp"
#include "gridbench/evalkit.hpp"
#include "gridbench/palette_config.hpp"
#include "gridbench/runner.hpp"
#include "gridbench/tasks.hpp"

namespace fs = std::filesystem;
using namespace gridbench;

namespace {

struct GenArgs {
    std::string task;
    int n = 10;
    std::uint64_t seed = 0;
    std::string out;
    std::string palette;
    int cell_px = 0;
    int gridline_px = -1;
    std::string interpolation = "discrete";
    int frames = 0;
    std::string boundary;
    // task knobs
    int clues = 0;
    int cells_w = 0, cells_h = 0, pad = -1;
    int width = 15, height = 15;
    double density = -1.0;
    int rule = 110;
    std::string life_rule = "B3/S23";
    int steps = -1;
    std::string fen_file;
};

std::vector<std::string> read_fen_lines(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open FEN file '" + path.string() + "'");
    std::vector<std::string> fens;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty() && line[0] != '#') fens.push_back(line);
    }
    return fens;
}

std::vector<Palette> load_palette_overrides(const std::string& path) {
    if (path.empty()) return {};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open palette file '" + path + "'");
    const std::string text{std::istreambuf_iterator<char>(in),
                           std::istreambuf_iterator<char>()};
    return palettes_from_json(text);
}

fs::path default_out_root() {
    if (const char* env = std::getenv("GRIDBENCH_OUT")) return fs::path(env);
    return fs::path(".");
}

void write_file(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
    out << text;
}

int run_gen(const GenArgs& args, const std::vector<Palette>& palettes) {
    const TaskKind kind = task_from_name(args.task);
    const FamilyDefaults defaults = family_defaults(kind);

    GenOptions opt;
    opt.sudoku_clues = args.clues;
    opt.maze_cells_w = args.cells_w;
    opt.maze_cells_h = args.cells_h;
    opt.maze_pad = args.pad;
    opt.field_width = args.width;
    opt.field_height = args.height;
    opt.density = args.density;
    opt.eca_rule = args.rule;
    opt.life_rule = args.life_rule;
    opt.steps = args.steps;
    if (!args.boundary.empty()) opt.boundary = boundary_from_name(args.boundary);
    if (kind == TaskKind::Chess) {
        if (args.fen_file.empty()) throw DataError("chess generation needs --fen-file");
        opt.fen_list = read_fen_lines(args.fen_file);
    }

    ExportConfig config;
    config.task = task_name(kind);
    config.palette_name = args.palette.empty() ? defaults.palette : args.palette;
    config.render = defaults.render;
    if (args.cell_px > 0) config.render.cell_px = args.cell_px;
    if (args.gridline_px >= 0) config.render.gridline_px = args.gridline_px;
    config.interpolation = interpolation_from_name(args.interpolation);
    config.frame_count = args.frames;

    const fs::path out_dir =
        args.out.empty() ? default_out_root() / (args.task + "_s" + std::to_string(args.seed) +
                                                 "_n" + std::to_string(args.n))
                         : fs::path(args.out);

    const bool existed_before = fs::exists(out_dir);
    try {
        const auto instances = generate_run(kind, opt, args.seed, args.n);
        const Palette& palette = resolve_palette(config.palette_name, palettes);
        export_dataset(instances, palette, config, out_dir);
    } catch (...) {
        // never leave a half-written dataset behind
        std::error_code ec;
        if (!existed_before) fs::remove_all(out_dir, ec);
        throw;
    }
    std::cout << out_dir.string() << "\n";
    return 0;
}

int run_eval(const std::string& task, const std::string& gold, const std::string& pred,
             const std::string& out, const std::string& format,
             const std::vector<Palette>& palettes) {
    const fs::path out_dir = out.empty() ? fs::path(pred) : fs::path(out);
    fs::create_directories(out_dir);
    std::ostringstream summary;

    if (task == "arc") {
        const ArcEvalReport report = eval_arc_dir(gold, pred);
        for (const auto& id : report.missing)
            std::cerr << "missing or unscorable attempts: " << id << "\n";
        nlohmann::json j = {{"protocol", "arc-two-attempt"},
                            {"solved", report.solved},
                            {"total", report.total},
                            {"accuracy", report.accuracy},
                            {"missing", report.missing}};
        if (format != "csv") write_file(out_dir / "report.json", j.dump(2) + "\n");
        if (format != "json") {
            char buf[128];
            std::snprintf(buf, sizeof(buf),
                          "protocol,solved,total,accuracy\narc-two-attempt,%d,%d,%.4f\n",
                          report.solved, report.total, report.accuracy);
            write_file(out_dir / "report.csv", buf);
        }
        summary << "solved " << report.solved << "/" << report.total;
    } else if (task == "conceptarc") {
        const ConceptReport report = eval_conceptarc_dir(gold, pred);
        if (format != "csv") write_file(out_dir / "report.json", concept_report_json(report));
        if (format != "json") write_file(out_dir / "report.csv", concept_report_csv(report));
        summary << "macro average " << report.macro_average;
    } else {
        const DatasetEvalReport report = eval_dataset_dir(gold, pred, palettes);
        if (report.task != task)
            throw DataError("dataset at '" + gold + "' holds task '" + report.task +
                            "', not '" + task + "'");
        for (const auto& id : report.missing)
            std::cerr << "missing prediction: " << id << "\n";
        nlohmann::json j = {{"task", report.task},
                            {"accuracy", report.accuracy},
                            {"n_matched", report.n_matched},
                            {"n_total", report.n_total},
                            {"missing", report.missing}};
        std::string header = "task,n,accuracy";
        char buf[256];
        std::snprintf(buf, sizeof(buf), "%s,%d,%.4f", report.task.c_str(), report.n_total,
                      report.accuracy);
        std::string row = buf;
        if (report.route_metrics) {
            const PathMetrics& m = *report.route_metrics;
            j["psr"] = m.psr;
            j["n_valid"] = m.n_valid;
            if (m.rpl_mean) j["rpl_mean"] = *m.rpl_mean;
            header += ",psr,rpl_mean,n_valid,n_total";
            if (m.rpl_mean)
                std::snprintf(buf, sizeof(buf), ",%.4f,%.4f,%d,%d", m.psr, *m.rpl_mean,
                              m.n_valid, m.n_total);
            else
                std::snprintf(buf, sizeof(buf), ",%.4f,-,%d,%d", m.psr, m.n_valid, m.n_total);
            row += buf;
        }
        if (format != "csv") write_file(out_dir / "report.json", j.dump(2) + "\n");
        if (format != "json") write_file(out_dir / "report.csv", header + "\n" + row + "\n");
        summary << "accuracy " << report.accuracy;
        if (report.route_metrics) summary << ", psr " << report.route_metrics->psr;
    }
    std::cout << summary.str() << "\n";
    return 0;
}

int run_decode(const std::string& image_path, const std::string& palette_name, int rows,
               int cols, int cell_px, int gridline_px,
               const std::vector<Palette>& palettes) {
    const Palette& palette = resolve_palette(palette_name, palettes);
    const RenderSpec spec{.cell_px = cell_px, .gridline_px = gridline_px};
    const Image img = read_png(image_path);
    const Grid grid = decode_image(img, palette, spec, rows, cols);
    std::cout << to_json(grid) << "\n";
    return 0;
}

int run_curve(const std::string& input, double delta, const std::string& out,
              const std::string& format) {
    std::ifstream in(input);
    if (!in) throw IoError("cannot open '" + input + "'");
    const auto curves = curves_from_csv(in);
    const auto table = threshold_table(curves, delta);
    const fs::path out_dir = out.empty() ? fs::path(".") : fs::path(out);
    fs::create_directories(out_dir);
    if (format != "json") {
        write_file(out_dir / "curves.csv", curves_csv(curves));
        write_file(out_dir / "thresholds.csv", thresholds_csv(table, delta));
    }
    if (format != "csv") {
        write_file(out_dir / "curves.json", curves_json(curves));
        write_file(out_dir / "thresholds.json", thresholds_json(table, delta));
    }
    int reached = 0;
    for (const auto& e : table) reached += e.n ? 1 : 0;
    std::cout << curves.size() << " curves, " << reached << " reach delta " << delta << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"grid-task dataset generation and evaluation"};
    app.require_subcommand(1);
    app.set_config("--config");
    std::string palette_file;
    app.add_option("--palette-file", palette_file,
                   "JSON registry of extra palettes (name -> {value: [r,g,b]})");

    std::vector<std::string> task_choices;
    for (const auto& [kind, name] : task_names()) task_choices.push_back(name);

    GenArgs gen;
    auto* cmd_gen = app.add_subcommand("gen", "generate a dataset");
    cmd_gen->add_option("--task", gen.task, "task family")
        ->required()
        ->check(CLI::IsMember(task_choices));
    cmd_gen->add_option("--n", gen.n, "instance count")->check(CLI::PositiveNumber);
    cmd_gen->add_option("--seed", gen.seed, "run seed");
    cmd_gen->add_option("--out", gen.out, "output directory (default $GRIDBENCH_OUT/<run>)");
    cmd_gen->add_option("--palette", gen.palette, "palette override");
    cmd_gen->add_option("--cell-px", gen.cell_px, "cell size in pixels")
        ->check(CLI::PositiveNumber);
    cmd_gen->add_option("--gridline-px", gen.gridline_px, "separator line thickness");
    cmd_gen->add_option("--interp", gen.interpolation, "frame interpolation")
        ->check(CLI::IsMember({"discrete", "convex"}));
    cmd_gen->add_option("--frames", gen.frames, "transition frame count (0 = none)")
        ->check(CLI::Range(0, 64));
    cmd_gen->add_option("--boundary", gen.boundary, "automaton boundary mode")
        ->check(CLI::IsMember({"toroidal", "dead"}));
    cmd_gen->add_option("--clues", gen.clues, "sudoku clue count");
    cmd_gen->add_option("--cells-w", gen.cells_w, "maze cells across");
    cmd_gen->add_option("--cells-h", gen.cells_h, "maze cells down");
    cmd_gen->add_option("--pad", gen.pad, "maze background padding");
    cmd_gen->add_option("--width", gen.width, "field width");
    cmd_gen->add_option("--height", gen.height, "field height");
    cmd_gen->add_option("--density", gen.density, "obstacle or fill density");
    cmd_gen->add_option("--rule", gen.rule, "elementary rule number")->check(CLI::Range(0, 255));
    cmd_gen->add_option("--life-rule", gen.life_rule, "birth/survival rule, e.g. B3/S23");
    cmd_gen->add_option("--steps", gen.steps, "evolution steps or ant horizon");
    cmd_gen->add_option("--fen-file", gen.fen_file, "FEN list for chess ingestion");

    std::string eval_task, eval_gold, eval_pred, eval_out, eval_format = "both";
    auto* cmd_eval = app.add_subcommand("eval", "score predictions");
    std::vector<std::string> eval_choices = task_choices;
    eval_choices.push_back("arc");
    eval_choices.push_back("conceptarc");
    cmd_eval->add_option("--task", eval_task, "task family or protocol")
        ->required()
        ->check(CLI::IsMember(eval_choices));
    cmd_eval->add_option("--gold", eval_gold, "dataset or task-file directory")->required();
    cmd_eval->add_option("--pred", eval_pred, "prediction directory")->required();
    cmd_eval->add_option("--out", eval_out, "report directory (default: prediction dir)");
    cmd_eval->add_option("--format", eval_format, "report format")
        ->check(CLI::IsMember({"csv", "json", "both"}));

    std::string dec_image, dec_palette = "arc";
    int dec_rows = 0, dec_cols = 0, dec_cell = 16, dec_grid = 0;
    auto* cmd_decode = app.add_subcommand("decode", "decode a rendered PNG to JSON");
    cmd_decode->add_option("image", dec_image, "PNG path")->required();
    cmd_decode->add_option("--palette", dec_palette, "palette name");
    cmd_decode->add_option("--rows", dec_rows, "grid rows")->required()->check(CLI::PositiveNumber);
    cmd_decode->add_option("--cols", dec_cols, "grid columns")
        ->required()
        ->check(CLI::PositiveNumber);
    cmd_decode->add_option("--cell-px", dec_cell, "cell size in pixels");
    cmd_decode->add_option("--gridline-px", dec_grid, "separator line thickness");

    std::string curve_input, curve_out, curve_format = "both";
    double curve_delta = 0.9;
    auto* cmd_curve = app.add_subcommand("curve", "curves and thresholds from a results CSV");
    cmd_curve->add_option("--input", curve_input, "CSV of task,model,n,accuracy")->required();
    cmd_curve->add_option("--delta", curve_delta, "accuracy threshold");
    cmd_curve->add_option("--out", curve_out, "report directory");
    cmd_curve->add_option("--format", curve_format, "report format")
        ->check(CLI::IsMember({"csv", "json", "both"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        app.exit(e);
        return 1;
    }

    try {
        const std::vector<Palette> palettes = load_palette_overrides(palette_file);
        if (cmd_gen->parsed()) return run_gen(gen, palettes);
        if (cmd_eval->parsed())
            return run_eval(eval_task, eval_gold, eval_pred, eval_out, eval_format, palettes);
        if (cmd_decode->parsed())
            return run_decode(dec_image, dec_palette, dec_rows, dec_cols, dec_cell, dec_grid,
                              palettes);
        if (cmd_curve->parsed())
            return run_curve(curve_input, curve_delta, curve_out, curve_format);
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
