#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vglove/image.hpp"

namespace vglove {

/// Pixel metric for the chamfer scan. The two-pass algorithm is exact for
/// both unit-weight metrics.
enum class Connectivity { CityBlock, Chessboard };

std::string to_string(Connectivity c);

/// Per-pixel step count to the nearest background pixel; 0 on background.
/// Pixels outside the image border count as background.
struct DistanceMap {
    int width = 0;
    int height = 0;
    Connectivity metric = Connectivity::CityBlock;
    std::vector<std::int32_t> values;  // row-major

    DistanceMap() = default;
    DistanceMap(int w, int h, Connectivity m)
        : width(w), height(h), metric(m), values(static_cast<std::size_t>(w) * h, 0) {}

    std::int32_t at(int row, int col) const {
        return values[static_cast<std::size_t>(row) * width + col];
    }
    friend bool operator==(const DistanceMap&, const DistanceMap&) = default;
};

// Two-pass forward/backward chamfer scan, exact for the chosen metric.
DistanceMap distance_transform(const BinaryMask& mask,
                               Connectivity metric = Connectivity::CityBlock);

// Brute-force oracle: exhaustive per-pixel minimum over all background
// positions including the virtual border ring. O(N^2), test sizes only.
DistanceMap dt_oracle(const BinaryMask& mask, Connectivity metric = Connectivity::CityBlock);

// P5 PGM (maxval 255) with values clamped to 255, for visual dumps.
std::vector<std::uint8_t> encode_distance_pgm(const DistanceMap& dmap);

}  // namespace vglove
