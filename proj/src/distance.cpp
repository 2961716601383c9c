#include "vglove/distance.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>

namespace vglove {

std::string to_string(Connectivity c) {
    return c == Connectivity::CityBlock ? "city-block" : "chessboard";
}

DistanceMap distance_transform(const BinaryMask& mask, Connectivity metric) {
    const int w = mask.width, h = mask.height;
    DistanceMap d(w, h, metric);
    const bool diag = (metric == Connectivity::Chessboard);

    // A neighbour outside the image is background, so it contributes 0+1.
    auto fetch = [&](int r, int c) -> std::int32_t {
        if (r < 0 || r >= h || c < 0 || c >= w) return 0;
        return d.values[static_cast<std::size_t>(r) * w + c];
    };

    // Forward pass: top/left (and upper diagonals for chessboard).
    for (int r = 0; r < h; ++r) {
        for (int c = 0; c < w; ++c) {
            std::size_t i = static_cast<std::size_t>(r) * w + c;
            if (!mask.bits[i]) {
                d.values[i] = 0;
                continue;
            }
            std::int32_t v = std::min(fetch(r - 1, c), fetch(r, c - 1));
            if (diag) v = std::min({v, fetch(r - 1, c - 1), fetch(r - 1, c + 1)});
            d.values[i] = v + 1;
        }
    }
    // Backward pass: bottom/right.
    for (int r = h - 1; r >= 0; --r) {
        for (int c = w - 1; c >= 0; --c) {
            std::size_t i = static_cast<std::size_t>(r) * w + c;
            if (!mask.bits[i]) continue;
            std::int32_t v = std::min(fetch(r + 1, c), fetch(r, c + 1));
            if (diag) v = std::min({v, fetch(r + 1, c - 1), fetch(r + 1, c + 1)});
            d.values[i] = std::min(d.values[i], v + 1);
        }
    }
    return d;
}

DistanceMap dt_oracle(const BinaryMask& mask, Connectivity metric) {
    const int w = mask.width, h = mask.height;
    DistanceMap d(w, h, metric);
    auto dist = [&](int r0, int c0, int r1, int c1) -> std::int32_t {
        int dr = std::abs(r0 - r1), dc = std::abs(c0 - c1);
        return metric == Connectivity::CityBlock ? dr + dc : std::max(dr, dc);
    };
    for (int r = 0; r < h; ++r) {
        for (int c = 0; c < w; ++c) {
            std::size_t i = static_cast<std::size_t>(r) * w + c;
            if (!mask.bits[i]) {
                d.values[i] = 0;
                continue;
            }
            // Nearest point of the virtual border ring. For both metrics this
            // is the axis-aligned step off the image.
            std::int32_t best = std::min({r + 1, c + 1, h - r, w - c});
            for (int br = 0; br < h; ++br)
                for (int bc = 0; bc < w; ++bc)
                    if (!mask.at(br, bc)) best = std::min(best, dist(r, c, br, bc));
            d.values[i] = best;
        }
    }
    return d;
}

std::vector<std::uint8_t> encode_distance_pgm(const DistanceMap& dmap) {
    std::string hdr = "P5\n" + std::to_string(dmap.width) + " " + std::to_string(dmap.height) +
                      "\n255\n";
    std::vector<std::uint8_t> out(hdr.begin(), hdr.end());
    out.reserve(out.size() + dmap.values.size());
    for (auto v : dmap.values)
        out.push_back(static_cast<std::uint8_t>(std::min<std::int32_t>(v, 255)));
    return out;
}

}  // namespace vglove
