#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

#include "gridbench/errors.hpp"
#include "gridbench/palette.hpp"

namespace gridbench {

/// Parse a palette registry document:
///   { "my_palette": { "0": [255,255,255], "1": [0,0,0] }, ... }
/// Injectivity is enforced per palette. Loaded palettes take precedence
/// over the built-ins of the same name.
inline std::vector<Palette> palettes_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_object())
        throw DataError("palette registry must be a JSON object");
    std::vector<Palette> out;
    for (const auto& [name, entries] : j.items()) {
        Palette p;
        p.name = name;
        if (!entries.is_object())
            throw DataError("palette '" + name + "' must map values to colors");
        for (const auto& [key, rgb] : entries.items()) {
            int value;
            try {
                value = std::stoi(key);
            } catch (const std::exception&) {
                throw DataError("palette '" + name + "' has a non-numeric value key");
            }
            if (value < 0 || value > kMaxCellValue) throw ValueOutOfRange(value);
            if (!rgb.is_array() || rgb.size() != 3)
                throw DataError("palette '" + name + "' colors must be [r,g,b]");
            for (const auto& ch : rgb) {
                const long long v = ch.get<long long>();
                if (v < 0 || v > 255) throw DataError("color channel outside 0..255");
            }
            p.entries[static_cast<CellValue>(value)] = {rgb.at(0).get<std::uint8_t>(),
                                                        rgb.at(1).get<std::uint8_t>(),
                                                        rgb.at(2).get<std::uint8_t>()};
        }
        if (p.entries.empty()) throw DataError("palette '" + name + "' is empty");
        p.check_injective();
        out.push_back(std::move(p));
    }
    return out;
}

/// Look a palette up among overrides first, then the built-in registry.
inline const Palette& resolve_palette(const std::string& name,
                                      const std::vector<Palette>& overrides) {
    for (const auto& p : overrides)
        if (p.name == name) return p;
    return builtin_palette(name);
}

}  // namespace gridbench
