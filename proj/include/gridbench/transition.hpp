#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "gridbench/errors.hpp"
#include "gridbench/image.hpp"

namespace gridbench {

enum class Interpolation { Discrete, Convex };

/// Transition exports default to eight frames under the hold-then-switch
/// scheme; both are configurable per export.
inline constexpr int kDefaultFrameCount = 8;

inline const char* interpolation_name(Interpolation k) {
    return k == Interpolation::Discrete ? "discrete" : "convex";
}

inline Interpolation interpolation_from_name(const std::string& s) {
    if (s == "discrete") return Interpolation::Discrete;
    if (s == "convex") return Interpolation::Convex;
    throw DataError("unknown interpolation '" + s + "'");
}

/// Frame sequence realizing an input-to-output transition: the first frame
/// renders the task input, the last frame the task output.
struct TransitionVideo {
    std::vector<Image> frames;
    Interpolation interpolation = Interpolation::Discrete;
    std::string task_id;
    std::string instance_id;
};

namespace detail {
inline void check_pair(const Image& ix, const Image& iy, int frame_count) {
    if (frame_count < 2) throw BadFrameCount("a transition needs at least 2 frames");
    if (ix.height != iy.height || ix.width != iy.width)
        throw DimensionMismatch("endpoint frames differ in size");
}
}  // namespace detail

/// Hold the input frame for the first half of the sequence, then switch to
/// the output frame. Frame f (1-based) shows the input iff f <= F/2; the
/// comparison is exact (2f <= F), so an odd F puts its middle frame on the
/// output side.
inline TransitionVideo build_discrete(const Image& ix, const Image& iy, int frame_count) {
    detail::check_pair(ix, iy, frame_count);
    TransitionVideo v;
    v.interpolation = Interpolation::Discrete;
    v.frames.reserve(frame_count);
    for (int f = 1; f <= frame_count; ++f) v.frames.push_back(2 * f <= frame_count ? ix : iy);
    return v;
}

/// Per-pixel blend along alpha = (f-1)/(F-1). Interior channels round half
/// up; the endpoints are bit-exact copies of the inputs (alpha 0 and 1 are
/// never rounded).
inline TransitionVideo build_convex(const Image& ix, const Image& iy, int frame_count) {
    detail::check_pair(ix, iy, frame_count);
    TransitionVideo v;
    v.interpolation = Interpolation::Convex;
    v.frames.reserve(frame_count);
    v.frames.push_back(ix);
    for (int f = 2; f < frame_count; ++f) {
        const double alpha = static_cast<double>(f - 1) / (frame_count - 1);
        Image frame(ix.height, ix.width);
        for (std::size_t i = 0; i < frame.pixels.size(); ++i) {
            const Rgb& a = ix.pixels[i];
            const Rgb& b = iy.pixels[i];
            auto blend = [&](std::uint8_t ca, std::uint8_t cb) {
                return static_cast<std::uint8_t>(
                    std::floor((1.0 - alpha) * ca + alpha * cb + 0.5));
            };
            frame.pixels[i] = {blend(a.r, b.r), blend(a.g, b.g), blend(a.b, b.b)};
        }
        v.frames.push_back(std::move(frame));
    }
    v.frames.push_back(iy);
    return v;
}

/// A generated video's prediction is its final frame.
inline const Image& extract_prediction(const std::vector<Image>& frames) {
    if (frames.empty()) throw EmptyVideo("no frames to extract a prediction from");
    return frames.back();
}

inline const Image& extract_prediction(const TransitionVideo& video) {
    return extract_prediction(video.frames);
}

}  // namespace gridbench
