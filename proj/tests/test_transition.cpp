#include <catch2/catch_amalgamated.hpp>

#include "gridbench/render.hpp"
#include "gridbench/transition.hpp"

#include "support.hpp"

using namespace gridbench;

namespace {
Image solid(int h, int w, Rgb c) { return Image(h, w, c); }

Image random_image(Rng& rng, int h, int w) {
    Image img(h, w);
    for (Rgb& px : img.pixels)
        px = {static_cast<std::uint8_t>(rng.below(256)), static_cast<std::uint8_t>(rng.below(256)),
              static_cast<std::uint8_t>(rng.below(256))};
    return img;
}
}  // namespace

TEST_CASE("discrete case split") {
    Image ix = solid(2, 2, {10, 10, 10});
    Image iy = solid(2, 2, {200, 200, 200});

    auto v2 = build_discrete(ix, iy, 2);
    REQUIRE(v2.frames.size() == 2);
    CHECK(v2.frames[0] == ix);
    CHECK(v2.frames[1] == iy);

    auto v4 = build_discrete(ix, iy, 4);
    CHECK(v4.frames[0] == ix);
    CHECK(v4.frames[1] == ix);
    CHECK(v4.frames[2] == iy);
    CHECK(v4.frames[3] == iy);

    // odd length: the middle frame falls past the halfway point
    auto v5 = build_discrete(ix, iy, 5);
    CHECK(v5.frames[0] == ix);
    CHECK(v5.frames[1] == ix);
    CHECK(v5.frames[2] == iy);
    CHECK(v5.frames[3] == iy);
    CHECK(v5.frames[4] == iy);
}

TEST_CASE("discrete videos hold at most two distinct frames") {
    Rng rng(11);
    Image ix = random_image(rng, 4, 5);
    Image iy = random_image(rng, 4, 5);
    for (int f = 2; f <= 12; ++f) {
        auto v = build_discrete(ix, iy, f);
        for (const Image& frame : v.frames) CHECK((frame == ix || frame == iy));
        CHECK(v.frames.front() == ix);
        CHECK(v.frames.back() == iy);
    }
}

TEST_CASE("convex endpoints are bit-exact") {
    Rng rng(21);
    Image ix = random_image(rng, 6, 6);
    Image iy = random_image(rng, 6, 6);
    for (int f : {2, 3, 8}) {
        auto v = build_convex(ix, iy, f);
        CHECK(v.frames.front() == ix);
        CHECK(v.frames.back() == iy);
    }
}

TEST_CASE("convex middle frame rounds half up") {
    Image ix = solid(1, 1, {0, 0, 0});
    Image iy = solid(1, 1, {255, 255, 255});
    auto v = build_convex(ix, iy, 3);
    // 0.5 * 255 = 127.5 rounds up
    CHECK(v.frames[1].at(0, 0) == Rgb{128, 128, 128});
}

TEST_CASE("convex frames are per-channel monotone") {
    Rng rng(31);
    for (int i = 0; i < 100; ++i) {
        Image ix = random_image(rng, 3, 4);
        Image iy = random_image(rng, 3, 4);
        auto v = build_convex(ix, iy, 7);
        for (std::size_t p = 0; p < ix.pixels.size(); ++p) {
            auto channel = [&](const Image& im, int ch) {
                const Rgb& px = im.pixels[p];
                return ch == 0 ? px.r : ch == 1 ? px.g : px.b;
            };
            for (int ch = 0; ch < 3; ++ch) {
                const bool up = channel(iy, ch) >= channel(ix, ch);
                for (std::size_t f = 1; f < v.frames.size(); ++f) {
                    const int prev = channel(v.frames[f - 1], ch);
                    const int cur = channel(v.frames[f], ch);
                    REQUIRE((up ? cur >= prev : cur <= prev));
                }
            }
        }
    }
}

TEST_CASE("frame count and dimension validation") {
    Image a(2, 2), b(2, 3);
    CHECK_THROWS_AS(build_discrete(a, a, 1), BadFrameCount);
    CHECK_THROWS_AS(build_discrete(a, b, 4), DimensionMismatch);
    CHECK_THROWS_AS(build_convex(a, b, 4), DimensionMismatch);
}

TEST_CASE("extract_prediction returns the final frame") {
    Image ix = solid(2, 2, {1, 1, 1});
    Image iy = solid(2, 2, {2, 2, 2});
    CHECK(extract_prediction(build_discrete(ix, iy, 2)) == iy);
    CHECK(extract_prediction(std::vector<Image>{ix}) == ix);
    CHECK_THROWS_AS(extract_prediction(std::vector<Image>{}), EmptyVideo);
    for (int f : {2, 5, 9}) {
        CHECK(extract_prediction(build_discrete(ix, iy, f)) == iy);
        CHECK(extract_prediction(build_convex(ix, iy, f)) == iy);
    }
}
