#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "gridbench/errors.hpp"
#include "gridbench/grid.hpp"

namespace gridbench {

struct Rgb {
    std::uint8_t r = 0, g = 0, b = 0;
    friend bool operator==(const Rgb&, const Rgb&) = default;
};

inline double rgb_distance(const Rgb& a, const Rgb& b) {
    const double dr = static_cast<double>(a.r) - b.r;
    const double dg = static_cast<double>(a.g) - b.g;
    const double db = static_cast<double>(a.b) - b.b;
    return std::sqrt(dr * dr + dg * dg + db * db);
}

/// Injective mapping from cell values to tile colors. Together with a
/// RenderSpec this fixes the rendering of every task family, so decoding a
/// clean render always recovers the source grid.
struct Palette {
    std::string name;
    std::map<CellValue, Rgb> entries;

    bool contains(CellValue v) const { return entries.count(v) != 0; }

    const Rgb& color(CellValue v) const {
        auto it = entries.find(v);
        if (it == entries.end()) throw UnmappedCellValue(v);
        return it->second;
    }

    /// Smallest pairwise color distance; infinity for single-entry palettes.
    double min_pair_distance() const {
        double best = std::numeric_limits<double>::infinity();
        for (auto a = entries.begin(); a != entries.end(); ++a) {
            auto b = a;
            for (++b; b != entries.end(); ++b)
                best = std::min(best, rgb_distance(a->second, b->second));
        }
        return best;
    }

    /// Throws DataError if two values share a color.
    void check_injective() const {
        for (auto a = entries.begin(); a != entries.end(); ++a) {
            auto b = a;
            for (++b; b != entries.end(); ++b)
                if (a->second == b->second)
                    throw DataError("palette '" + name + "' maps values " +
                                    std::to_string(a->first) + " and " +
                                    std::to_string(b->first) + " to the same color");
        }
    }
};

/// Geometry of the rasterizer: solid cell tiles, optional separator lines
/// framing every cell (including the outer border).
struct RenderSpec {
    int cell_px = 16;
    int gridline_px = 0;
    Rgb gridline_rgb{120, 120, 120};

    int image_width(int cols) const { return cols * cell_px + (cols + 1) * gridline_px; }
    int image_height(int rows) const { return rows * cell_px + (rows + 1) * gridline_px; }

    void check() const {
        if (cell_px < 1) throw BadDimensions("cell_px must be positive");
        if (gridline_px < 0) throw BadDimensions("gridline_px must be non-negative");
    }
};

/// Registry format version; bump when any built-in color assignment changes.
inline constexpr const char* kPaletteRegistryVersion = "1";

/// Built-in palettes, one per task family.
///
/// The color assignments are a toolkit convention:
///   arc      standard ten ARC colors
///   sudoku   0 = empty cell, digits reuse the ARC hues
///   hitori   digits 1..5 plus 0/1 shading mask values
///   connect4 0 empty, 1/2 player tokens
///   chess    0 empty plus twelve piece values; 1..6 white pawn..king in warm
///            hues, 7..12 black pawn..king in cool hues (reconstructed
///            mapping, see README)
///   maze     0 wall, 1 open, 2 goal, 3 start, 4 path (shared with
///            shortest-path tasks)
///   binary   two-state automata fields
///   eca      0 untouched background, 1 dead, 2 alive
///   ant      binary field plus 2 for the agent
inline const std::vector<Palette>& builtin_palettes() {
    static const std::vector<Palette> palettes = [] {
        auto arc_colors = std::map<CellValue, Rgb>{
            {0, {0, 0, 0}},       {1, {0, 116, 217}},  {2, {255, 65, 54}},
            {3, {46, 204, 64}},   {4, {255, 220, 0}},  {5, {170, 170, 170}},
            {6, {240, 18, 190}},  {7, {255, 133, 27}}, {8, {127, 219, 255}},
            {9, {135, 12, 37}},
        };
        std::vector<Palette> v;
        v.push_back({"arc", arc_colors});

        std::map<CellValue, Rgb> sudoku{{0, {255, 255, 255}}};
        for (CellValue d = 1; d <= 9; ++d) sudoku[d] = arc_colors[d];
        v.push_back({"sudoku", sudoku});

        v.push_back({"hitori",
                     {{0, {255, 255, 255}},
                      {1, {0, 116, 217}},
                      {2, {255, 65, 54}},
                      {3, {46, 204, 64}},
                      {4, {255, 220, 0}},
                      {5, {135, 12, 37}}}});

        v.push_back({"connect4",
                     {{0, {255, 255, 255}}, {1, {255, 65, 54}}, {2, {255, 220, 0}}}});

        v.push_back({"chess",
                     {{0, {240, 217, 181}},
                      {1, {255, 255, 255}},
                      {2, {255, 220, 0}},
                      {3, {255, 133, 27}},
                      {4, {240, 18, 190}},
                      {5, {255, 65, 54}},
                      {6, {135, 12, 37}},
                      {7, {127, 219, 255}},
                      {8, {0, 116, 217}},
                      {9, {46, 204, 64}},
                      {10, {0, 100, 0}},
                      {11, {75, 0, 130}},
                      {12, {0, 0, 0}}}});

        v.push_back({"maze",
                     {{0, {0, 0, 0}},
                      {1, {255, 255, 255}},
                      {2, {255, 65, 54}},
                      {3, {46, 204, 64}},
                      {4, {0, 116, 217}}}});

        v.push_back({"binary", {{0, {255, 255, 255}}, {1, {0, 0, 0}}}});

        v.push_back({"eca",
                     {{0, {170, 170, 170}}, {1, {255, 255, 255}}, {2, {0, 0, 0}}}});

        v.push_back({"ant",
                     {{0, {255, 255, 255}}, {1, {0, 0, 0}}, {2, {255, 65, 54}}}});

        for (auto& p : v) p.check_injective();
        return v;
    }();
    return palettes;
}

inline const Palette& builtin_palette(const std::string& name) {
    for (const auto& p : builtin_palettes())
        if (p.name == name) return p;
    throw DataError("unknown palette '" + name + "'");
}

}  // namespace gridbench
