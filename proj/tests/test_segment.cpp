#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "vglove/segment.hpp"

using namespace vglove;

namespace {

RgbdFrame make_frame(int w, int h, std::uint16_t depth_mm) {
    RgbFrame color(w, h);
    for (auto& p : color.pixels) p = 200;
    DepthFrame depth(w, h);
    for (auto& d : depth.depths) d = depth_mm;
    return RgbdFrame(std::move(color), std::move(depth), 0);
}

RgbdFrame random_frame(std::mt19937& rng, int w, int h) {
    RgbFrame color(w, h);
    for (auto& p : color.pixels) p = static_cast<std::uint8_t>(rng());
    DepthFrame depth(w, h);
    for (auto& d : depth.depths) d = static_cast<std::uint16_t>(rng() % 1200);
    return RgbdFrame(std::move(color), std::move(depth), 0);
}

}  // namespace

TEST_CASE("everything beyond the threshold is background") {
    RgbdFrame f = make_frame(8, 8, 800);
    SegmentedFrame seg = depth_threshold(f, 500);
    CHECK(seg.mask.count_ones() == 0);
    for (auto p : seg.color.pixels) CHECK(p == 0);
}

TEST_CASE("pixels at 400 mm stay, 900 mm go, at the 500 mm operating threshold") {
    RgbdFrame f = make_frame(10, 10, 900);
    for (int r = 3; r < 7; ++r)
        for (int c = 3; c < 7; ++c) f.depth.at(r, c) = 400;
    SegmentedFrame seg = depth_threshold(f, 500);
    for (int r = 0; r < 10; ++r)
        for (int c = 0; c < 10; ++c) {
            bool inside = r >= 3 && r < 7 && c >= 3 && c < 7;
            CHECK(seg.mask.at(r, c) == (inside ? 1 : 0));
        }
}

TEST_CASE("depth 0 (no reading) is background regardless of threshold") {
    RgbdFrame f = make_frame(4, 4, 0);
    SegmentedFrame seg = depth_threshold(f, 500);
    CHECK(seg.mask.count_ones() == 0);
    SegmentedFrame seg2 = depth_threshold(f, 65535);
    CHECK(seg2.mask.count_ones() == 0);
}

TEST_CASE("the boundary depth is inclusive") {
    RgbdFrame f = make_frame(2, 2, 500);
    SegmentedFrame seg = depth_threshold(f, 500);
    CHECK(seg.mask.count_ones() == 4);
}

TEST_CASE("mask law, monotonicity and color preservation on random frames") {
    std::mt19937 rng(42);
    for (int i = 0; i < 50; ++i) {
        RgbdFrame f = random_frame(rng, 1 + rng() % 24, 1 + rng() % 24);
        int t1 = 300 + static_cast<int>(rng() % 300);
        int t2 = t1 + static_cast<int>(rng() % 300);
        SegmentedFrame s1 = depth_threshold(f, t1);
        SegmentedFrame s2 = depth_threshold(f, t2);
        for (std::size_t p = 0; p < f.depth.depths.size(); ++p) {
            std::uint16_t d = f.depth.depths[p];
            CHECK(s1.mask.bits[p] == ((d > 0 && d <= t1) ? 1 : 0));
            if (s1.mask.bits[p]) {
                CHECK(s2.mask.bits[p] == 1);  // raising the threshold keeps 1s
                for (int ch = 0; ch < 3; ++ch)
                    CHECK(s1.color.pixels[3 * p + ch] == f.color.pixels[3 * p + ch]);
            }
        }
    }
}

TEST_CASE("to_binary is a bit-for-bit projection") {
    std::mt19937 rng(5);
    RgbdFrame f = random_frame(rng, 12, 9);
    SegmentedFrame seg = depth_threshold(f, 500);
    BinaryMask m = to_binary(seg);
    CHECK(m == seg.mask);

    RgbdFrame far = make_frame(6, 6, 900);
    CHECK(to_binary(depth_threshold(far, 500)).count_ones() == 0);
}

TEST_CASE("non-positive threshold is rejected") {
    RgbdFrame f = make_frame(2, 2, 100);
    CHECK_THROWS_AS(depth_threshold(f, 0), DataError);
}
