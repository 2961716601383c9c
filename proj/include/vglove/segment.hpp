#pragma once

#include "vglove/image.hpp"

namespace vglove {

inline constexpr int kDefaultThresholdMm = 500;

/// Hand region cut out of a frame by depth. Background pixels are black and
/// mask=0; depth 0 (sensor dropout) always counts as background.
struct SegmentedFrame {
    RgbFrame color;
    DepthFrame depth;  // unmodified source depth, kept for the net input
    BinaryMask mask;
    int threshold_mm = kDefaultThresholdMm;
};

// mask(p)=1 iff 0 < depth(p) <= threshold_mm; color preserved under the mask,
// zeroed elsewhere.
SegmentedFrame depth_threshold(const RgbdFrame& frame, int threshold_mm);

// Identity projection of the mask, kept as a named pipeline step.
BinaryMask to_binary(const SegmentedFrame& seg);

}  // namespace vglove
