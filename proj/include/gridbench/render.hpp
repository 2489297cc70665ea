#pragma once

#include <cmath>
#include <limits>

#include "gridbench/errors.hpp"
#include "gridbench/grid.hpp"
#include "gridbench/image.hpp"
#include "gridbench/palette.hpp"

namespace gridbench {

/// Rasterize a grid: each cell becomes a solid cell_px square of its palette
/// color; separator lines of gridline_px frame every cell when enabled.
/// Pure and deterministic, so equal inputs yield byte-identical pixels.
inline Image render_grid(const Grid& g, const Palette& palette, const RenderSpec& spec) {
    spec.check();
    for (CellValue v : g.cells())
        if (!palette.contains(v)) throw UnmappedCellValue(v);

    Image img(spec.image_height(g.rows()), spec.image_width(g.cols()), spec.gridline_rgb);
    const int stride = spec.cell_px + spec.gridline_px;
    for (int r = 0; r < g.rows(); ++r) {
        for (int c = 0; c < g.cols(); ++c) {
            const Rgb& color = palette.color(g.at(r, c));
            const int y0 = spec.gridline_px + r * stride;
            const int x0 = spec.gridline_px + c * stride;
            for (int y = y0; y < y0 + spec.cell_px; ++y)
                for (int x = x0; x < x0 + spec.cell_px; ++x) img.at(y, x) = color;
        }
    }
    return img;
}

/// Recover a grid from a rendered image by averaging each cell block
/// (gridline pixels excluded) and snapping to the nearest palette color.
///
/// Exact on clean renders. `tolerance` is the largest accepted distance
/// between a block mean and its nearest color; the default, half the
/// smallest inter-color distance, rejects means that have drifted into
/// no-man's land. Ties and out-of-tolerance means raise AmbiguousCell.
inline Grid decode_image(const Image& img, const Palette& palette, const RenderSpec& spec,
                         int rows, int cols, double tolerance = -1.0) {
    spec.check();
    if (rows < 1 || cols < 1) throw BadDimensions("grid dimensions must be positive");
    if (img.height != spec.image_height(rows) || img.width != spec.image_width(cols))
        throw DimensionMismatch("image is " + std::to_string(img.height) + "x" +
                                std::to_string(img.width) + ", expected " +
                                std::to_string(spec.image_height(rows)) + "x" +
                                std::to_string(spec.image_width(cols)));
    if (palette.entries.empty()) throw DataError("palette is empty");
    if (tolerance < 0) tolerance = palette.min_pair_distance() / 2.0;

    Grid out(rows, cols);
    const int stride = spec.cell_px + spec.gridline_px;
    const double block = static_cast<double>(spec.cell_px) * spec.cell_px;
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            const int y0 = spec.gridline_px + r * stride;
            const int x0 = spec.gridline_px + c * stride;
            double sr = 0, sg = 0, sb = 0;
            for (int y = y0; y < y0 + spec.cell_px; ++y) {
                for (int x = x0; x < x0 + spec.cell_px; ++x) {
                    const Rgb& p = img.at(y, x);
                    sr += p.r;
                    sg += p.g;
                    sb += p.b;
                }
            }
            const double mr = sr / block, mg = sg / block, mb = sb / block;
            double best = std::numeric_limits<double>::infinity();
            double second = std::numeric_limits<double>::infinity();
            CellValue best_value = 0;
            for (const auto& [value, color] : palette.entries) {
                const double dr = mr - color.r, dg = mg - color.g, db = mb - color.b;
                const double d = std::sqrt(dr * dr + dg * dg + db * db);
                if (d < best) {
                    second = best;
                    best = d;
                    best_value = value;
                } else if (d < second) {
                    second = d;
                }
            }
            if (best > tolerance || second - best < 1e-9) throw AmbiguousCell(r, c);
            out.set(r, c, best_value);
        }
    }
    return out;
}

}  // namespace gridbench
