#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "vglove/hand.hpp"
#include "vglove/segment.hpp"

namespace vglove {

struct Color {
    std::uint8_t r = 0, g = 0, b = 0;
    friend bool operator==(const Color&, const Color&) = default;
};

/// Colors and stroke widths for the glove overlay. The six colors must be
/// mutually distinct so each hand portion stays identifiable.
struct GloveStyle {
    Color palm{255, 220, 0};     // yellow
    Color thumb{220, 30, 30};    // red
    Color index{30, 200, 30};    // green
    Color middle{40, 80, 255};   // blue
    Color ring{230, 40, 230};    // magenta
    Color pinky{40, 220, 220};   // cyan
    // Sized for VGA frames: the classifier consumes a 10x downsampled view,
    // so strokes must stay >= ~1 px after resampling to survive the box filter.
    int line_thickness = 9;
    int circle_thickness = 5;

    void validate() const;
    std::array<Color, 5> finger_colors() const { return {thumb, index, middle, ring, pinky}; }
};

struct GloveRender {
    RgbFrame image;
    bool glove_drawn = false;  // false when the palm estimate was invalid
};

inline constexpr int kDefaultNetInputSize = 64;

/// Classifier input tensor: channels 0-2 glove RGB, channel 3 normalized
/// segmented depth. Values in [0,1], layout [channel][row][col].
struct NetInput {
    int size = kDefaultNetInputSize;
    std::vector<float> data;  // 4 * size * size

    NetInput() = default;
    explicit NetInput(int s) : size(s), data(static_cast<std::size_t>(4) * s * s, 0.f) {}
    float& at(int ch, int row, int col) {
        return data[(static_cast<std::size_t>(ch) * size + row) * size + col];
    }
    float at(int ch, int row, int col) const {
        return data[(static_cast<std::size_t>(ch) * size + row) * size + col];
    }
};

// Grayscale rendering of the segmented depth: brighter = closer, background
// black, giving the grayscale-depth debug view of the segmented hand.
RgbFrame depth_to_gray(const SegmentedFrame& seg);

// Draws the palm circle plus palm->knuckle and knuckle->fingertip links onto
// a copy of `base`. All drawing is clipped to the image; deterministic.
GloveRender render_glove(const RgbFrame& base, const HandKeypoints& kps, const PalmEstimate& palm,
                         const GloveStyle& style);

// Area-averaged resample of the glove image + normalized depth channel.
NetInput compose_net_input(const RgbFrame& glove, const SegmentedFrame& seg, int threshold_mm,
                           int size);

}  // namespace vglove
