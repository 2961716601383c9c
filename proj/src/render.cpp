#include "vglove/render.hpp"

#include <algorithm>
#include <cmath>

namespace vglove {

void GloveStyle::validate() const {
    const Color cs[6] = {palm, thumb, index, middle, ring, pinky};
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            if (cs[i] == cs[j]) throw DataError("glove style: colors must be mutually distinct");
    if (line_thickness < 1 || circle_thickness < 1)
        throw DataError("glove style: thickness must be >= 1");
}

namespace {

void put(RgbFrame& img, int row, int col, Color c) {
    if (img.in_bounds(row, col)) img.set(row, col, c.r, c.g, c.b);
}

// Stamps a filled disc of diameter `thickness`; thickness 1 is one pixel.
void stamp(RgbFrame& img, int row, int col, Color c, int thickness) {
    if (thickness <= 1) {
        put(img, row, col, c);
        return;
    }
    int rad = thickness / 2;
    for (int dr = -rad; dr <= rad; ++dr)
        for (int dc = -rad; dc <= rad; ++dc)
            if (dr * dr + dc * dc <= rad * rad) put(img, row + dr, col + dc, c);
}

// Bresenham; both endpoints always stamped.
void draw_line(RgbFrame& img, int r0, int c0, int r1, int c1, Color color, int thickness) {
    int dr = std::abs(r1 - r0), dc = std::abs(c1 - c0);
    int sr = r0 < r1 ? 1 : -1, sc = c0 < c1 ? 1 : -1;
    int err = dc - dr;
    for (;;) {
        stamp(img, r0, c0, color, thickness);
        if (r0 == r1 && c0 == c1) break;
        int e2 = 2 * err;
        if (e2 > -dr) {
            err -= dr;
            c0 += sc;
        }
        if (e2 < dc) {
            err += dc;
            r0 += sr;
        }
    }
}

// Midpoint circle outline; hits the four cardinal points exactly.
void draw_circle(RgbFrame& img, int cr, int cc, int radius, Color color, int thickness) {
    if (radius <= 0) {
        stamp(img, cr, cc, color, thickness);
        return;
    }
    int x = radius, y = 0;
    int err = 1 - radius;
    while (x >= y) {
        stamp(img, cr + y, cc + x, color, thickness);
        stamp(img, cr + x, cc + y, color, thickness);
        stamp(img, cr + x, cc - y, color, thickness);
        stamp(img, cr + y, cc - x, color, thickness);
        stamp(img, cr - y, cc - x, color, thickness);
        stamp(img, cr - x, cc - y, color, thickness);
        stamp(img, cr - x, cc + y, color, thickness);
        stamp(img, cr - y, cc + x, color, thickness);
        ++y;
        if (err < 0) {
            err += 2 * y + 1;
        } else {
            --x;
            err += 2 * (y - x) + 1;
        }
    }
}

struct PixelPoint {
    int row, col;
};

PixelPoint to_pixel(Landmark lm, int width, int height) {
    return {static_cast<int>(std::lround(lm.y * (height - 1))),
            static_cast<int>(std::lround(lm.x * (width - 1)))};
}

}  // namespace

RgbFrame depth_to_gray(const SegmentedFrame& seg) {
    RgbFrame out(seg.mask.width, seg.mask.height);
    const double t = seg.threshold_mm;
    for (std::size_t i = 0; i < seg.mask.bits.size(); ++i) {
        if (!seg.mask.bits[i]) continue;
        double v = std::clamp(1.0 - seg.depth.depths[i] / t, 0.0, 1.0);
        auto g = static_cast<std::uint8_t>(std::lround(v * 255.0));
        auto* p = out.pixels.data() + 3 * i;
        p[0] = p[1] = p[2] = g;
    }
    return out;
}

GloveRender render_glove(const RgbFrame& base, const HandKeypoints& kps, const PalmEstimate& palm,
                         const GloveStyle& style) {
    if (!palm.valid) return {base, false};
    style.validate();

    GloveRender out{base, true};
    RgbFrame& img = out.image;

    draw_circle(img, palm.center_row, palm.center_col, palm.radius, style.palm,
                style.circle_thickness);

    // Per finger: palm-center -> MCP, then MCP -> fingertip.
    constexpr int kMcp[5] = {landmark::kThumbMcp, landmark::kIndexMcp, landmark::kMiddleMcp,
                             landmark::kRingMcp, landmark::kPinkyMcp};
    constexpr int kTip[5] = {landmark::kThumbTip, landmark::kIndexTip, landmark::kMiddleTip,
                             landmark::kRingTip, landmark::kPinkyTip};
    auto colors = style.finger_colors();
    for (int f = 0; f < 5; ++f) {
        PixelPoint mcp = to_pixel(kps.landmarks[kMcp[f]], img.width, img.height);
        PixelPoint tip = to_pixel(kps.landmarks[kTip[f]], img.width, img.height);
        draw_line(img, palm.center_row, palm.center_col, mcp.row, mcp.col, colors[f],
                  style.line_thickness);
        draw_line(img, mcp.row, mcp.col, tip.row, tip.col, colors[f], style.line_thickness);
    }
    return out;
}

NetInput compose_net_input(const RgbFrame& glove, const SegmentedFrame& seg, int threshold_mm,
                           int size) {
    if (glove.width != seg.mask.width || glove.height != seg.mask.height)
        throw DataError("compose_net_input: glove and segmented frame dimensions differ");
    if (size <= 0) throw DataError("compose_net_input: size must be positive");

    const int w = glove.width, h = glove.height;
    NetInput out(size);

    // Exact box-filter resample: output cell (i,j) averages the source box
    // [i*h/S,(i+1)*h/S) x [j*w/S,(j+1)*w/S) with fractional edge weights.
    auto resample = [&](auto&& sample, int ch) {
        for (int i = 0; i < size; ++i) {
            double y0 = static_cast<double>(i) * h / size;
            double y1 = static_cast<double>(i + 1) * h / size;
            for (int j = 0; j < size; ++j) {
                double x0 = static_cast<double>(j) * w / size;
                double x1 = static_cast<double>(j + 1) * w / size;
                double acc = 0;
                for (int ry = static_cast<int>(y0); ry < h && ry < y1; ++ry) {
                    double wy = std::min<double>(y1, ry + 1) - std::max<double>(y0, ry);
                    for (int rx = static_cast<int>(x0); rx < w && rx < x1; ++rx) {
                        double wx = std::min<double>(x1, rx + 1) - std::max<double>(x0, rx);
                        acc += wy * wx * sample(ry, rx);
                    }
                }
                out.at(ch, i, j) = static_cast<float>(acc / ((y1 - y0) * (x1 - x0)));
            }
        }
    };

    for (int ch = 0; ch < 3; ++ch)
        resample([&](int r, int c) { return glove.at(r, c)[ch] / 255.0; }, ch);
    const double t = threshold_mm;
    resample(
        [&](int r, int c) {
            if (!seg.mask.at(r, c)) return 0.0;
            return std::clamp(1.0 - seg.depth.at(r, c) / t, 0.0, 1.0);
        },
        3);
    return out;
}

}  // namespace vglove
