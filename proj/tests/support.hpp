#pragma once

#include <filesystem>
#include <fstream>
#include <string>

#include "gridbench/grid.hpp"
#include "gridbench/json_codec.hpp"
#include "gridbench/rng.hpp"

inline std::filesystem::path fixture_dir() {
    return std::filesystem::path(GRIDBENCH_FIXTURE_DIR);
}

inline std::string read_fixture_text(const std::string& name) {
    std::ifstream in(fixture_dir() / name, std::ios::binary);
    REQUIRE(in.good());
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

inline gridbench::Grid load_fixture_grid(const std::string& name) {
    return gridbench::from_json(read_fixture_text(name + ".json"));
}

/// Random grid over values 0..max_value, for roundtrip and property tests.
inline gridbench::Grid random_grid(gridbench::Rng& rng, int rows, int cols, int max_value) {
    gridbench::Grid g(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) g.set(r, c, rng.below_int(max_value + 1));
    return g;
}
