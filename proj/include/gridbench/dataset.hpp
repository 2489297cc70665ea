#pragma once

#include <nlohmann/json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <string>
#include <vector>

#include "gridbench/errors.hpp"
#include "gridbench/grid.hpp"
#include "gridbench/json_codec.hpp"
#include "gridbench/png_io.hpp"
#include "gridbench/render.hpp"
#include "gridbench/transition.hpp"

namespace gridbench {

/// Placeholder recorded in manifests where a text-conditioning embedding
/// would otherwise live. Downstream trainers substitute the real thing.
inline constexpr const char* kNeutralTextConditioning = "neutral";

/// One input/output pair with provenance.
struct TaskInstance {
    std::string id;
    std::uint64_t seed = 0;
    Grid input;
    Grid output;
};

struct ExportConfig {
    std::string task;
    std::string palette_name;
    RenderSpec render;
    Interpolation interpolation = Interpolation::Discrete;
    /// 0 = image/JSON pairs only, >= 2 adds transition frames
    int frame_count = kDefaultFrameCount;
    std::string text_conditioning = kNeutralTextConditioning;
};

struct ManifestRecord {
    std::string id;
    std::uint64_t seed = 0;
    std::string input_png;
    std::string frames_dir;
    std::string gold_json;
    std::string output_png;
    std::string input_json;
    int rows = 0;
    int cols = 0;
};

struct DatasetManifest {
    std::string task;
    std::string palette_name;
    RenderSpec render;
    Interpolation interpolation = Interpolation::Discrete;
    int frame_count = 0;
    std::string text_conditioning;
    std::vector<ManifestRecord> records;
};

namespace detail {

inline nlohmann::json manifest_to_json(const DatasetManifest& m) {
    nlohmann::json j;
    j["schema_version"] = 1;
    j["task"] = m.task;
    j["palette"] = m.palette_name;
    j["palette_registry"] = kPaletteRegistryVersion;
    j["render"] = {{"cell_px", m.render.cell_px},
                   {"gridline_px", m.render.gridline_px},
                   {"gridline_rgb",
                    {m.render.gridline_rgb.r, m.render.gridline_rgb.g, m.render.gridline_rgb.b}}};
    j["interpolation"] = interpolation_name(m.interpolation);
    j["frames"] = m.frame_count;
    j["text_conditioning"] = m.text_conditioning;
    auto& records = j["instances"] = nlohmann::json::array();
    for (const auto& r : m.records) {
        records.push_back({{"id", r.id},
                           {"seed", r.seed},
                           {"input", r.input_png},
                           {"frames_dir", r.frames_dir},
                           {"gold", r.gold_json},
                           {"output", r.output_png},
                           {"input_json", r.input_json},
                           {"rows", r.rows},
                           {"cols", r.cols}});
    }
    return j;
}

inline DatasetManifest manifest_from_json(const nlohmann::json& j) {
    DatasetManifest m;
    m.task = j.at("task").get<std::string>();
    m.palette_name = j.at("palette").get<std::string>();
    const auto& render = j.at("render");
    m.render.cell_px = render.at("cell_px").get<int>();
    m.render.gridline_px = render.at("gridline_px").get<int>();
    const auto& rgb = render.at("gridline_rgb");
    m.render.gridline_rgb = {rgb.at(0).get<std::uint8_t>(), rgb.at(1).get<std::uint8_t>(),
                             rgb.at(2).get<std::uint8_t>()};
    m.interpolation = interpolation_from_name(j.at("interpolation").get<std::string>());
    m.frame_count = j.at("frames").get<int>();
    m.text_conditioning = j.at("text_conditioning").get<std::string>();
    for (const auto& r : j.at("instances")) {
        ManifestRecord rec;
        rec.id = r.at("id").get<std::string>();
        rec.seed = r.at("seed").get<std::uint64_t>();
        rec.input_png = r.at("input").get<std::string>();
        rec.frames_dir = r.at("frames_dir").get<std::string>();
        rec.gold_json = r.at("gold").get<std::string>();
        rec.output_png = r.at("output").get<std::string>();
        rec.input_json = r.at("input_json").get<std::string>();
        rec.rows = r.at("rows").get<int>();
        rec.cols = r.at("cols").get<int>();
        m.records.push_back(std::move(rec));
    }
    return m;
}

inline void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
    out << text;
    if (!out) throw IoError("failed to write '" + path.string() + "'");
}

inline std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

inline std::string frame_name(int index) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "frame_%03d.png", index);
    return buf;
}

}  // namespace detail

/// Write a dataset directory:
///   out_dir/manifest.json
///   out_dir/<id>/input.png, output.png, input.json, gold.json
///   out_dir/<id>/frame_000.png .. frame_{F-1}.png   (when frames requested)
///
/// Re-exporting identical inputs produces a byte-identical tree. Paths in
/// the manifest are relative to out_dir.
inline DatasetManifest export_dataset(const std::vector<TaskInstance>& instances,
                                      const Palette& palette, const ExportConfig& config,
                                      const std::filesystem::path& out_dir) {
    if (instances.empty()) throw DataError("nothing to export");
    if (config.frame_count == 1 || config.frame_count < 0)
        throw BadFrameCount("frame count must be 0 (no frames) or at least 2");
    std::set<std::string> seen;
    for (const auto& inst : instances)
        if (!seen.insert(inst.id).second)
            throw DuplicateInstanceId("duplicate instance id '" + inst.id + "'");

    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw IoError("cannot create '" + out_dir.string() + "': " + ec.message());

    DatasetManifest manifest;
    manifest.task = config.task;
    manifest.palette_name = config.palette_name.empty() ? palette.name : config.palette_name;
    manifest.render = config.render;
    manifest.interpolation = config.interpolation;
    manifest.frame_count = config.frame_count;
    manifest.text_conditioning = config.text_conditioning;

    for (const auto& inst : instances) {
        const std::filesystem::path dir = out_dir / inst.id;
        std::filesystem::create_directories(dir, ec);
        if (ec) throw IoError("cannot create '" + dir.string() + "': " + ec.message());

        const Image ix = render_grid(inst.input, palette, config.render);
        const Image iy = render_grid(inst.output, palette, config.render);
        write_png(ix, dir / "input.png");
        write_png(iy, dir / "output.png");
        detail::write_text_file(dir / "input.json", to_json(inst.input));
        detail::write_text_file(dir / "gold.json", to_json(inst.output));
        if (config.frame_count >= 2) {
            TransitionVideo video = config.interpolation == Interpolation::Discrete
                                        ? build_discrete(ix, iy, config.frame_count)
                                        : build_convex(ix, iy, config.frame_count);
            video.task_id = config.task;
            video.instance_id = inst.id;
            for (int f = 0; f < config.frame_count; ++f)
                write_png(video.frames[f], dir / detail::frame_name(f));
        }

        ManifestRecord rec;
        rec.id = inst.id;
        rec.seed = inst.seed;
        rec.input_png = inst.id + "/input.png";
        rec.frames_dir = inst.id;
        rec.gold_json = inst.id + "/gold.json";
        rec.output_png = inst.id + "/output.png";
        rec.input_json = inst.id + "/input.json";
        rec.rows = inst.output.rows();
        rec.cols = inst.output.cols();
        manifest.records.push_back(std::move(rec));
    }

    // every referenced file must exist before the manifest is finalized
    for (const auto& r : manifest.records) {
        for (const auto& rel : {r.input_png, r.gold_json, r.output_png, r.input_json})
            if (!std::filesystem::exists(out_dir / rel))
                throw IoError("export did not produce '" + rel + "'");
    }

    detail::write_text_file(out_dir / "manifest.json",
                            detail::manifest_to_json(manifest).dump(2) + "\n");
    return manifest;
}

inline DatasetManifest read_manifest(const std::filesystem::path& dataset_dir) {
    const auto text = detail::read_text_file(dataset_dir / "manifest.json");
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded()) throw DataError("manifest.json is not valid JSON");
    try {
        return detail::manifest_from_json(j);
    } catch (const nlohmann::json::exception& e) {
        throw DataError(std::string("bad manifest: ") + e.what());
    }
}

}  // namespace gridbench
