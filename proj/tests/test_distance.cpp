#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "vglove/distance.hpp"

using namespace vglove;

namespace {

BinaryMask random_mask(std::mt19937& rng, int w, int h) {
    BinaryMask m(w, h);
    for (auto& b : m.bits) b = rng() % 2;
    return m;
}

}  // namespace

TEST_CASE("single foreground pixel in a sea of background") {
    BinaryMask m(7, 7);
    m.at(3, 4) = 1;
    DistanceMap d = distance_transform(m);
    for (int r = 0; r < 7; ++r)
        for (int c = 0; c < 7; ++c) CHECK(d.at(r, c) == ((r == 3 && c == 4) ? 1 : 0));
}

TEST_CASE("all-background mask gives an all-zero map") {
    BinaryMask m(9, 5);
    DistanceMap d = distance_transform(m);
    for (auto v : d.values) CHECK(v == 0);
}

TEST_CASE("5x5 all-foreground: border counts as background") {
    BinaryMask m(5, 5);
    for (auto& b : m.bits) b = 1;
    DistanceMap d = distance_transform(m);
    CHECK(d.at(2, 2) == 3);
    CHECK(d.at(0, 0) == 1);
    CHECK(d.at(0, 4) == 1);
    CHECK(d.at(4, 0) == 1);
    CHECK(d.at(4, 4) == 1);
    CHECK(d == dt_oracle(m));
}

TEST_CASE("single-pixel image, foreground, has value 1") {
    BinaryMask m(1, 1);
    m.bits[0] = 1;
    CHECK(distance_transform(m).values[0] == 1);
    CHECK(dt_oracle(m).values[0] == 1);
}

TEST_CASE("two-pass scan matches the brute-force oracle on random masks") {
    std::mt19937 rng(123);
    for (auto metric : {Connectivity::CityBlock, Connectivity::Chessboard}) {
        for (int i = 0; i < 200; ++i) {
            int w = 1 + rng() % 16, h = 1 + rng() % 16;
            BinaryMask m = random_mask(rng, w, h);
            CHECK(distance_transform(m, metric) == dt_oracle(m, metric));
        }
    }
}

TEST_CASE("output is 1-Lipschitz over 4-adjacency and >=1 on foreground") {
    std::mt19937 rng(77);
    for (int i = 0; i < 50; ++i) {
        int w = 2 + rng() % 20, h = 2 + rng() % 20;
        BinaryMask m = random_mask(rng, w, h);
        DistanceMap d = distance_transform(m);
        for (int r = 0; r < h; ++r)
            for (int c = 0; c < w; ++c) {
                if (m.at(r, c)) CHECK(d.at(r, c) >= 1);
                if (r + 1 < h) CHECK(std::abs(d.at(r, c) - d.at(r + 1, c)) <= 1);
                if (c + 1 < w) CHECK(std::abs(d.at(r, c) - d.at(r, c + 1)) <= 1);
            }
    }
}

TEST_CASE("values increment by one per pixel on straight runs toward the interior") {
    // middle row of an 11x11 all-foreground block: distance grows
    // 1,2,3,... from the left edge to the center
    BinaryMask m(11, 11);
    for (auto& b : m.bits) b = 1;
    DistanceMap d = distance_transform(m);
    for (int c = 0; c <= 5; ++c) CHECK(d.at(5, c) == c + 1);
}

TEST_CASE("pgm dump clamps values to 255") {
    BinaryMask m(600, 600);
    for (auto& b : m.bits) b = 1;
    DistanceMap d = distance_transform(m);
    CHECK(d.at(299, 299) == 300);  // exceeds the 8-bit range
    auto bytes = encode_distance_pgm(d);
    std::string header = "P5\n600 600\n255\n";
    CHECK(std::string(bytes.begin(), bytes.begin() + header.size()) == header);
    CHECK(bytes[header.size() + 299 * 600 + 299] == 255);  // clamped
    CHECK(bytes[header.size()] == 1);                      // corner stays 1
}
