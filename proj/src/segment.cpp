#include "vglove/segment.hpp"

namespace vglove {

SegmentedFrame depth_threshold(const RgbdFrame& frame, int threshold_mm) {
    if (threshold_mm <= 0) throw DataError("depth threshold must be positive");
    SegmentedFrame seg{frame.color, frame.depth, BinaryMask(frame.depth.width, frame.depth.height),
                       threshold_mm};
    const std::size_t n = frame.depth.depths.size();
    for (std::size_t i = 0; i < n; ++i) {
        std::uint16_t d = frame.depth.depths[i];
        if (d > 0 && d <= threshold_mm) {
            seg.mask.bits[i] = 1;
        } else {
            auto* px = seg.color.pixels.data() + 3 * i;
            px[0] = px[1] = px[2] = 0;
        }
    }
    return seg;
}

BinaryMask to_binary(const SegmentedFrame& seg) { return seg.mask; }

}  // namespace vglove
