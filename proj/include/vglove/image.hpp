#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace vglove {

/// Data-level failure (bad file, bad dimensions, bad stream). The CLI maps
/// this to exit code 2.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

/// 8-bit interleaved RGB image, row-major.
struct RgbFrame {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;  // 3 * width * height, RGB order

    RgbFrame() = default;
    RgbFrame(int w, int h) : width(w), height(h), pixels(static_cast<std::size_t>(3) * w * h, 0) {
        if (w <= 0 || h <= 0) throw DataError("RgbFrame: dimensions must be positive");
    }

    std::uint8_t* at(int row, int col) {
        return pixels.data() + 3 * (static_cast<std::size_t>(row) * width + col);
    }
    const std::uint8_t* at(int row, int col) const {
        return pixels.data() + 3 * (static_cast<std::size_t>(row) * width + col);
    }
    void set(int row, int col, std::uint8_t r, std::uint8_t g, std::uint8_t b) {
        auto* p = at(row, col);
        p[0] = r; p[1] = g; p[2] = b;
    }
    bool in_bounds(int row, int col) const {
        return row >= 0 && row < height && col >= 0 && col < width;
    }
    friend bool operator==(const RgbFrame&, const RgbFrame&) = default;
};

/// 16-bit depth image in millimetres; 0 means "no reading".
struct DepthFrame {
    int width = 0;
    int height = 0;
    std::vector<std::uint16_t> depths;  // row-major

    DepthFrame() = default;
    DepthFrame(int w, int h) : width(w), height(h), depths(static_cast<std::size_t>(w) * h, 0) {
        if (w <= 0 || h <= 0) throw DataError("DepthFrame: dimensions must be positive");
    }

    std::uint16_t& at(int row, int col) {
        return depths[static_cast<std::size_t>(row) * width + col];
    }
    std::uint16_t at(int row, int col) const {
        return depths[static_cast<std::size_t>(row) * width + col];
    }
    friend bool operator==(const DepthFrame&, const DepthFrame&) = default;
};

/// Paired color + depth frame. Dimensions always match.
struct RgbdFrame {
    RgbFrame color;
    DepthFrame depth;
    std::int64_t frame_id = 0;

    RgbdFrame() = default;
    RgbdFrame(RgbFrame c, DepthFrame d, std::int64_t id);
};

/// Row-major 0/1 mask.
struct BinaryMask {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> bits;  // values 0 or 1

    BinaryMask() = default;
    BinaryMask(int w, int h) : width(w), height(h), bits(static_cast<std::size_t>(w) * h, 0) {
        if (w <= 0 || h <= 0) throw DataError("BinaryMask: dimensions must be positive");
    }

    std::uint8_t& at(int row, int col) {
        return bits[static_cast<std::size_t>(row) * width + col];
    }
    std::uint8_t at(int row, int col) const {
        return bits[static_cast<std::size_t>(row) * width + col];
    }
    std::size_t count_ones() const;
    friend bool operator==(const BinaryMask&, const BinaryMask&) = default;
};

}  // namespace vglove
