#pragma once

#include <algorithm>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gridbench/arc.hpp"
#include "gridbench/dataset.hpp"
#include "gridbench/evalkit.hpp"
#include "gridbench/palette_config.hpp"
#include "gridbench/path.hpp"
#include "gridbench/png_io.hpp"
#include "gridbench/render.hpp"
#include "gridbench/tasks.hpp"
#include "gridbench/transition.hpp"

namespace gridbench {

/// Resolve one prediction for an instance id inside pred_dir. Accepted
/// layouts, in order: <id>.json (a grid), <id>.png, <id>/ holding
/// frame_*.png (the final frame is the prediction per the video-output
/// convention). Returns nothing when the id has no prediction, and a
/// failure record (nullopt grid) when decoding fails.
inline std::optional<std::optional<Grid>> load_prediction(const std::filesystem::path& pred_dir,
                                                          const std::string& id,
                                                          const Palette& palette,
                                                          const RenderSpec& spec, int rows,
                                                          int cols) {
    namespace fs = std::filesystem;
    const fs::path json_path = pred_dir / (id + ".json");
    if (fs::exists(json_path)) {
        try {
            return std::optional<Grid>(from_json(detail::read_text_file(json_path)));
        } catch (const DataError&) {
            return std::optional<Grid>(std::nullopt);
        }
    }
    auto decode_file = [&](const fs::path& p) -> std::optional<Grid> {
        try {
            return decode_image(read_png(p), palette, spec, rows, cols);
        } catch (const DataError&) {
            return std::nullopt;
        } catch (const IoError&) {
            return std::nullopt;
        }
    };
    const fs::path png_path = pred_dir / (id + ".png");
    if (fs::exists(png_path)) return decode_file(png_path);
    const fs::path dir = pred_dir / id;
    if (fs::is_directory(dir)) {
        std::vector<fs::path> frames;
        for (const auto& entry : fs::directory_iterator(dir)) {
            const std::string name = entry.path().filename().string();
            if (name.rfind("frame_", 0) == 0 && entry.path().extension() == ".png")
                frames.push_back(entry.path());
        }
        if (!frames.empty()) {
            std::sort(frames.begin(), frames.end());
            return decode_file(frames.back());
        }
    }
    return std::nullopt;  // no prediction present
}

struct DatasetEvalReport {
    std::string task;
    double accuracy = 0.0;
    int n_total = 0;
    int n_matched = 0;
    std::vector<std::string> missing;         ///< ids with no prediction at all
    std::optional<PathMetrics> route_metrics; ///< present for route families
    std::vector<PredictionRecord> records;
};

/// Score a prediction directory against a generated dataset. Missing
/// predictions are listed and scored as mismatches. Route families get
/// PSR/RPL on top of exact match.
inline DatasetEvalReport eval_dataset_dir(const std::filesystem::path& gold_dir,
                                          const std::filesystem::path& pred_dir,
                                          const std::vector<Palette>& palette_overrides = {}) {
    const DatasetManifest manifest = read_manifest(gold_dir);
    const Palette& palette = resolve_palette(manifest.palette_name, palette_overrides);
    const TaskKind kind = task_from_name(manifest.task);

    DatasetEvalReport report;
    report.task = manifest.task;
    report.n_total = static_cast<int>(manifest.records.size());

    std::vector<PathEvalCase> route_cases;
    for (const auto& rec : manifest.records) {
        const Grid gold = from_json(detail::read_text_file(gold_dir / rec.gold_json));
        auto prediction = load_prediction(pred_dir, rec.id, palette, manifest.render, rec.rows,
                                          rec.cols);
        PredictionRecord pr;
        pr.instance_id = rec.id;
        pr.gold = gold;
        if (!prediction) {
            report.missing.push_back(rec.id);
        } else {
            pr.predicted = *prediction;
        }
        if (pr.matches()) ++report.n_matched;

        if (is_route_task(kind) && pr.predicted) {
            const Grid input = from_json(detail::read_text_file(gold_dir / rec.input_json));
            route_cases.push_back({input, gold, *pr.predicted});
        }
        report.records.push_back(std::move(pr));
    }
    report.accuracy =
        report.n_total == 0 ? 0.0 : static_cast<double>(report.n_matched) / report.n_total;
    if (is_route_task(kind)) {
        // absent or undecodable predictions never form a valid path; they
        // stay in the denominator
        PathMetrics m = compute_metrics(route_cases);
        m.n_total = report.n_total;
        m.psr = report.n_total == 0 ? 0.0 : static_cast<double>(m.n_valid) / report.n_total;
        report.route_metrics = m;
    }
    return report;
}

// ---- ARC directories ----

/// Attempts for one task: a JSON array with one entry per test input, each
/// entry an array of attempt grids; or a directory <task_id>/ of PNGs named
/// t<test>_a<attempt>.png with declared dimensions in dims.json.
inline AttemptSet load_attempts(const std::filesystem::path& pred_dir, const std::string& task_id,
                                std::size_t n_test, const Palette& palette,
                                const RenderSpec& spec) {
    namespace fs = std::filesystem;
    const fs::path json_path = pred_dir / (task_id + ".json");
    if (fs::exists(json_path)) {
        nlohmann::json j =
            nlohmann::json::parse(detail::read_text_file(json_path), nullptr, false);
        if (j.is_discarded() || !j.is_array())
            throw DataError("attempt file for '" + task_id + "' must be a JSON array");
        AttemptSet attempts;
        for (const auto& per_input : j) {
            std::vector<Grid> list;
            for (const auto& g : per_input) list.push_back(detail_arc::grid_from_json_value(g));
            attempts.push_back(std::move(list));
        }
        return attempts;
    }
    const fs::path dir = pred_dir / task_id;
    if (fs::is_directory(dir)) {
        nlohmann::json dims =
            nlohmann::json::parse(detail::read_text_file(dir / "dims.json"), nullptr, false);
        if (dims.is_discarded())
            throw DataError("dims.json for '" + task_id + "' is not valid JSON");
        AttemptSet attempts(n_test);
        for (std::size_t t = 0; t < n_test; ++t) {
            const int rows = dims.at(t).at(0).get<int>();
            const int cols = dims.at(t).at(1).get<int>();
            for (int a = 0;; ++a) {
                char name[64];
                std::snprintf(name, sizeof(name), "t%zu_a%d.png", t, a);
                const fs::path frame = dir / name;
                if (!fs::exists(frame)) break;
                attempts[t].push_back(decode_image(read_png(frame), palette, spec, rows, cols));
            }
        }
        return attempts;
    }
    throw DataError("no attempts found for task '" + task_id + "'");
}

struct ArcEvalReport {
    int solved = 0;
    int total = 0;
    double accuracy = 0.0;
    std::vector<std::string> missing;
};

/// Two-attempt protocol over a directory of task files.
inline ArcEvalReport eval_arc_dir(const std::filesystem::path& gold_dir,
                                  const std::filesystem::path& pred_dir,
                                  const Palette& palette = builtin_palette("arc"),
                                  const RenderSpec& spec = RenderSpec{.cell_px = 16,
                                                                      .gridline_px = 0}) {
    namespace fs = std::filesystem;
    ArcEvalReport report;
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(gold_dir))
        if (entry.path().extension() == ".json") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const auto& file : files) {
        const std::string task_id = file.stem().string();
        const ArcTask task = parse_arc_task(detail::read_text_file(file), task_id);
        ++report.total;
        try {
            const AttemptSet attempts =
                load_attempts(pred_dir, task_id, task.test.size(), palette, spec);
            if (score_arc_two_attempt(task, attempts)) ++report.solved;
        } catch (const DataError&) {
            report.missing.push_back(task_id);  // unscorable counts as unsolved
        }
    }
    report.accuracy =
        report.total == 0 ? 0.0 : static_cast<double>(report.solved) / report.total;
    return report;
}

/// Three-attempt protocol over concept subdirectories:
/// gold_dir/<concept>/<task>.json.
inline ConceptReport eval_conceptarc_dir(const std::filesystem::path& gold_dir,
                                         const std::filesystem::path& pred_dir,
                                         int budget = 3) {
    namespace fs = std::filesystem;
    const Palette& palette = builtin_palette("arc");
    const RenderSpec spec{.cell_px = 16, .gridline_px = 0};
    std::vector<std::pair<std::string, std::vector<bool>>> groups;
    std::vector<fs::path> concepts;
    for (const auto& entry : fs::directory_iterator(gold_dir))
        if (entry.is_directory()) concepts.push_back(entry.path());
    std::sort(concepts.begin(), concepts.end());
    for (const auto& concept_dir : concepts) {
        std::vector<bool> flags;
        std::vector<fs::path> files;
        for (const auto& entry : fs::directory_iterator(concept_dir))
            if (entry.path().extension() == ".json") files.push_back(entry.path());
        std::sort(files.begin(), files.end());
        for (const auto& file : files) {
            const std::string task_id = file.stem().string();
            const ArcTask task = parse_arc_task(detail::read_text_file(file), task_id);
            try {
                const AttemptSet attempts = load_attempts(
                    pred_dir / concept_dir.filename(), task_id, task.test.size(), palette, spec);
                const auto per_input = score_conceptarc(task, attempts, budget);
                flags.insert(flags.end(), per_input.begin(), per_input.end());
            } catch (const DataError&) {
                flags.insert(flags.end(), task.test.size(), false);
            }
        }
        groups.emplace_back(concept_dir.filename().string(), std::move(flags));
    }
    return concept_report(groups);
}

}  // namespace gridbench
