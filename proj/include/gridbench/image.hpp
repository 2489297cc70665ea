#pragma once

#include <vector>

#include "gridbench/errors.hpp"
#include "gridbench/palette.hpp"

namespace gridbench {

/// 8-bit RGB raster, row-major, no alpha.
struct Image {
    int height = 0;
    int width = 0;
    std::vector<Rgb> pixels;

    Image() = default;
    Image(int h, int w, Rgb fill = {0, 0, 0})
        : height(h), width(w), pixels(static_cast<std::size_t>(h) * w, fill) {
        if (h < 1 || w < 1) throw BadDimensions("image dimensions must be positive");
    }

    const Rgb& at(int y, int x) const { return pixels[static_cast<std::size_t>(y) * width + x]; }
    Rgb& at(int y, int x) { return pixels[static_cast<std::size_t>(y) * width + x]; }

    friend bool operator==(const Image&, const Image&) = default;
};

}  // namespace gridbench
