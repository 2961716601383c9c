#include "vglove/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "json.hpp"
#include "vglove/codec.hpp"
#include "vglove/rng.hpp"

namespace vglove {

void SynthParams::validate(int threshold_mm, int margin_mm) const {
    if (width <= 0 || height <= 0) throw DataError("synth: image size must be positive");
    if (hand_depth_min_mm <= 0 || hand_depth_min_mm > hand_depth_max_mm)
        throw DataError("synth: bad hand depth range");
    if (bg_depth_min_mm > bg_depth_max_mm) throw DataError("synth: bad background depth range");
    if (hand_depth_max_mm > threshold_mm - margin_mm)
        throw DataError("synth: hand depth range must stay below threshold minus margin");
    if (bg_depth_min_mm <= threshold_mm)
        throw DataError("synth: background depth range must lie beyond the threshold");
}

std::string SynthParams::to_json() const {
    nlohmann::json j{{"width", width},
                     {"height", height},
                     {"palm_radius", {palm_radius_min, palm_radius_max}},
                     {"finger_len", {finger_len_min, finger_len_max}},
                     {"finger_width", {finger_width_min, finger_width_max}},
                     {"rotation_deg", {rotation_deg_min, rotation_deg_max}},
                     {"translation_px", {translation_px_min, translation_px_max}},
                     {"scale", {scale_min, scale_max}},
                     {"hand_depth_mm", {hand_depth_min_mm, hand_depth_max_mm}},
                     {"bg_depth_mm", {bg_depth_min_mm, bg_depth_max_mm}},
                     {"depth_noise_sigma_mm", depth_noise_sigma_mm},
                     {"seed", seed},
                     {"metric", "city-block"}};
    return j.dump();
}

SynthParams SynthParams::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    SynthParams p;
    p.width = j.value("width", p.width);
    p.height = j.value("height", p.height);
    auto pair = [&](const char* key, double& lo, double& hi) {
        if (j.contains(key)) {
            lo = j[key][0].get<double>();
            hi = j[key][1].get<double>();
        }
    };
    pair("palm_radius", p.palm_radius_min, p.palm_radius_max);
    pair("finger_len", p.finger_len_min, p.finger_len_max);
    pair("finger_width", p.finger_width_min, p.finger_width_max);
    pair("rotation_deg", p.rotation_deg_min, p.rotation_deg_max);
    pair("translation_px", p.translation_px_min, p.translation_px_max);
    pair("scale", p.scale_min, p.scale_max);
    if (j.contains("hand_depth_mm")) {
        p.hand_depth_min_mm = j["hand_depth_mm"][0].get<int>();
        p.hand_depth_max_mm = j["hand_depth_mm"][1].get<int>();
    }
    if (j.contains("bg_depth_mm")) {
        p.bg_depth_min_mm = j["bg_depth_mm"][0].get<int>();
        p.bg_depth_max_mm = j["bg_depth_mm"][1].get<int>();
    }
    p.depth_noise_sigma_mm = j.value("depth_noise_sigma_mm", p.depth_noise_sigma_mm);
    p.seed = j.value("seed", p.seed);
    return p;
}

std::mt19937_64 frame_rng(const SynthParams& params, std::int64_t frame_id) {
    return std::mt19937_64(mix_seed(params.seed, static_cast<std::uint64_t>(frame_id)));
}

namespace {

struct Vec2 {
    double x = 0, y = 0;  // x = col, y = row
    Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    double norm() const { return std::hypot(x, y); }
};

Vec2 lerp(Vec2 a, Vec2 b, double t) { return a + (b - a) * t; }

// Unit vector at `deg` degrees from straight up, positive toward +x.
Vec2 dir_from_up(double deg) {
    double rad = deg * std::numbers::pi / 180.0;
    return {std::sin(rad), -std::cos(rad)};
}

double dist_point_segment(Vec2 p, Vec2 a, Vec2 b) {
    Vec2 ab = b - a;
    double len2 = ab.x * ab.x + ab.y * ab.y;
    if (len2 == 0) return (p - a).norm();
    double t = ((p.x - a.x) * ab.x + (p.y - a.y) * ab.y) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return (p - (a + ab * t)).norm();
}

void fill_disc(BinaryMask& m, Vec2 c, double radius) {
    int r0 = std::max(0, static_cast<int>(std::floor(c.y - radius)));
    int r1 = std::min(m.height - 1, static_cast<int>(std::ceil(c.y + radius)));
    int c0 = std::max(0, static_cast<int>(std::floor(c.x - radius)));
    int c1 = std::min(m.width - 1, static_cast<int>(std::ceil(c.x + radius)));
    double r2 = radius * radius;
    for (int r = r0; r <= r1; ++r)
        for (int col = c0; col <= c1; ++col) {
            double dx = col - c.x, dy = r - c.y;
            if (dx * dx + dy * dy <= r2) m.at(r, col) = 1;
        }
}

void fill_capsule(BinaryMask& m, Vec2 a, Vec2 b, double width) {
    double half = width / 2.0;
    int r0 = std::max(0, static_cast<int>(std::floor(std::min(a.y, b.y) - half)));
    int r1 = std::min(m.height - 1, static_cast<int>(std::ceil(std::max(a.y, b.y) + half)));
    int c0 = std::max(0, static_cast<int>(std::floor(std::min(a.x, b.x) - half)));
    int c1 = std::min(m.width - 1, static_cast<int>(std::ceil(std::max(a.x, b.x) + half)));
    for (int r = r0; r <= r1; ++r)
        for (int col = c0; col <= c1; ++col)
            if (dist_point_segment({double(col), double(r)}, a, b) <= half) m.at(r, col) = 1;
}

void fill_annulus(BinaryMask& m, Vec2 c, double radius, double thickness) {
    double half = thickness / 2.0;
    double outer = radius + half;
    int r0 = std::max(0, static_cast<int>(std::floor(c.y - outer)));
    int r1 = std::min(m.height - 1, static_cast<int>(std::ceil(c.y + outer)));
    int c0 = std::max(0, static_cast<int>(std::floor(c.x - outer)));
    int c1 = std::min(m.width - 1, static_cast<int>(std::ceil(c.x + outer)));
    for (int r = r0; r <= r1; ++r)
        for (int col = c0; col <= c1; ++col) {
            double d = std::hypot(col - c.x, r - c.y);
            if (std::abs(d - radius) <= half) m.at(r, col) = 1;
        }
}

struct FingerSpec {
    double base_angle_deg;
    double len_factor;
    int mcp_index;  // landmark index of the knuckle; joints follow sequentially
};

// thumb, index, middle, ring, pinky
constexpr FingerSpec kFingers[5] = {
    {-65.0, 0.65, landmark::kThumbMcp},
    {-25.0, 1.00, landmark::kIndexMcp},
    {0.0, 1.05, landmark::kMiddleMcp},
    {22.0, 0.95, landmark::kRingMcp},
    {48.0, 0.80, landmark::kPinkyMcp},
};

constexpr bool kExtended[kGestureCount][5] = {
    {false, true, false, false, false},  // OneFinger: index
    {false, true, true, false, false},   // TwoFingers: index + middle
    {true, false, false, false, false},  // Thumb
    {true, false, false, false, true},   // Shaka: thumb + pinky
    {false, false, true, true, true},    // Ok: middle/ring/pinky, thumb-index ring
};

}  // namespace

SynthSample synth_frame(GestureLabel label, const SynthParams& params, std::mt19937_64& rng) {
    const int w = params.width, h = params.height;

    // Fixed sampling order keeps frames reproducible from the rng state.
    double scale = uniform(rng, params.scale_min, params.scale_max);
    double palm_r = uniform(rng, params.palm_radius_min, params.palm_radius_max) * scale;
    double rot = uniform(rng, params.rotation_deg_min, params.rotation_deg_max);
    double tx = uniform(rng, params.translation_px_min, params.translation_px_max);
    double ty = uniform(rng, params.translation_px_min, params.translation_px_max);
    double finger_len[5], finger_w[5];
    for (int f = 0; f < 5; ++f) {
        finger_len[f] = uniform(rng, params.finger_len_min, params.finger_len_max) * scale *
                        kFingers[f].len_factor;
        finger_w[f] = uniform(rng, params.finger_width_min, params.finger_width_max) * scale;
    }
    double hand_base = uniform(rng, params.hand_depth_min_mm, params.hand_depth_max_mm);
    double bg_base = uniform(rng, params.bg_depth_min_mm, params.bg_depth_max_mm);
    int color_jitter = uniform_int(rng, -15, 15);

    Vec2 center{w / 2.0 + tx, h / 2.0 + ty};
    if (center.x - palm_r < 0 || center.x + palm_r > w - 1 || center.y - palm_r < 0 ||
        center.y + palm_r > h - 1)
        throw DataError("synth: palm disc does not fit the image with these parameters");

    const bool* extended = kExtended[static_cast<int>(label)];
    const bool ok_ring = (label == GestureLabel::Ok);

    BinaryMask mask(w, h);
    fill_disc(mask, center, palm_r);

    HandKeypoints kps;
    Vec2 tips[5], mcps[5];
    for (int f = 0; f < 5; ++f) {
        Vec2 dir = dir_from_up(rot + kFingers[f].base_angle_deg);
        Vec2 mcp = center + dir * palm_r;
        mcps[f] = mcp;
        Vec2 tip;
        Vec2 joints[2];
        bool ext = extended[f] || (ok_ring && (f == 0 || f == 1));
        if (ext && !(ok_ring && (f == 0 || f == 1))) {
            tip = mcp + dir * finger_len[f];
            joints[0] = mcp + dir * (finger_len[f] * 0.4);
            joints[1] = mcp + dir * (finger_len[f] * 0.7);
            fill_capsule(mask, mcp, tip, finger_w[f]);
        } else if (ok_ring && (f == 0 || f == 1)) {
            // thumb/index reach toward each other; the ring is drawn after
            // both tips are known
            double reach = f == 0 ? 0.8 : 0.6;
            tip = mcp + dir * (finger_len[f] * reach);
            joints[0] = lerp(mcp, tip, 0.4);
            joints[1] = lerp(mcp, tip, 0.7);
            fill_capsule(mask, mcp, tip, finger_w[f]);
        } else {
            // folded: joints curl onto the palm rim
            joints[0] = center + dir * (palm_r * 0.85);
            joints[1] = center + dir * (palm_r * 0.70);
            tip = center + dir * (palm_r * 0.55);
        }
        tips[f] = tip;
        if (f == 0) {
            kps.landmarks[landmark::kThumbCmc] = {float((center.x + dir.x * palm_r * 0.55) / (w - 1)),
                                                  float((center.y + dir.y * palm_r * 0.55) / (h - 1))};
        }
        int base = kFingers[f].mcp_index;
        Vec2 pts[3] = {mcp, joints[0], tip};
        if (f != 0) {
            Vec2 pts4[4] = {mcp, joints[0], joints[1], tip};
            for (int k = 0; k < 4; ++k)
                kps.landmarks[base + k] = {float(pts4[k].x / (w - 1)), float(pts4[k].y / (h - 1))};
        } else {
            // thumb: MCP, IP, TIP after the CMC
            for (int k = 0; k < 3; ++k)
                kps.landmarks[base + k] = {float(pts[k].x / (w - 1)), float(pts[k].y / (h - 1))};
        }
    }
    if (ok_ring) {
        Vec2 ring_center = lerp(tips[0], tips[1], 0.5);
        double ring_radius = std::max((tips[0] - tips[1]).norm() / 2.0, finger_w[0]);
        fill_annulus(mask, ring_center, ring_radius, finger_w[0]);
    }
    Vec2 wrist = center + dir_from_up(rot + 180.0) * (palm_r * 1.1);
    kps.landmarks[landmark::kWrist] = {float(wrist.x / (w - 1)), float(wrist.y / (h - 1))};

    // Depth and color from the mask.
    RgbFrame color(w, h);
    DepthFrame depth(w, h);
    auto jit = [&](int base) {
        return static_cast<std::uint8_t>(std::clamp(base + color_jitter, 0, 255));
    };
    std::uint8_t hand_rgb[3] = {jit(205), jit(160), jit(120)};
    std::uint8_t bg_rgb[3] = {jit(50), jit(55), jit(62)};
    const double sigma = params.depth_noise_sigma_mm;
    for (std::size_t i = 0; i < mask.bits.size(); ++i) {
        double noise = sigma > 0 ? sigma * gaussian(rng) : 0.0;
        if (mask.bits[i]) {
            int d = static_cast<int>(std::lround(hand_base + noise));
            depth.depths[i] = static_cast<std::uint16_t>(
                std::clamp(d, params.hand_depth_min_mm, params.hand_depth_max_mm));
            std::copy(hand_rgb, hand_rgb + 3, color.pixels.data() + 3 * i);
        } else {
            int d = static_cast<int>(std::lround(bg_base + noise));
            depth.depths[i] = static_cast<std::uint16_t>(
                std::clamp(d, params.bg_depth_min_mm, params.bg_depth_max_mm));
            std::copy(bg_rgb, bg_rgb + 3, color.pixels.data() + 3 * i);
        }
    }

    SynthSample sample{RgbdFrame(std::move(color), std::move(depth), 0), kps, label,
                       std::move(mask)};
    return sample;
}

std::filesystem::path synth_dataset(const std::array<int, kGestureCount>& counts_per_label,
                                    const SynthParams& params,
                                    const std::filesystem::path& out_dir, double train_frac,
                                    double val_frac) {
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);

    Manifest manifest;
    manifest.dir = out_dir;
    manifest.params_json = params.to_json();

    std::int64_t next_id = 0;
    for (int li = 0; li < kGestureCount; ++li) {
        auto label = static_cast<GestureLabel>(li);
        int n = counts_per_label[li];
        if (n < 0) throw DataError("synth: negative frame count");

        // Deterministic split assignment: shuffle the per-label slots, then
        // carve train/validation/test blocks.
        std::vector<int> order(n);
        for (int i = 0; i < n; ++i) order[i] = i;
        std::mt19937_64 split_rng(mix_seed(params.seed, 0x5EED0000ULL + li));
        for (int i = n - 1; i > 0; --i) std::swap(order[i], order[uniform_int(split_rng, 0, i)]);
        int n_train = static_cast<int>(n * train_frac);
        int n_val = static_cast<int>(n * val_frac);
        std::vector<Split> splits(n, Split::Test);
        for (int i = 0; i < n; ++i) {
            if (i < n_train) splits[order[i]] = Split::Train;
            else if (i < n_train + n_val) splits[order[i]] = Split::Validation;
        }

        for (int i = 0; i < n; ++i, ++next_id) {
            auto rng = frame_rng(params, next_id);
            SynthSample s = synth_frame(label, params, rng);
            s.frame.frame_id = next_id;
            s.keypoints.frame_id = next_id;

            char stem[64];
            std::snprintf(stem, sizeof stem, "frame_%06lld", static_cast<long long>(next_id));
            ManifestRecord rec;
            rec.frame_id = next_id;
            rec.color_path = std::string(stem) + "_color.ppm";
            rec.depth_path = std::string(stem) + "_depth.pgm";
            rec.keypoints_path = std::string(stem) + "_kps.json";
            rec.label = label;
            rec.split = splits[i];

            write_file(out_dir / rec.color_path, encode_rgb(s.frame.color));
            write_file(out_dir / rec.depth_path, encode_depth(s.frame.depth));
            save_keypoints(s.keypoints, out_dir / rec.keypoints_path);
            manifest.records.push_back(std::move(rec));
        }
    }

    fs::path manifest_path = out_dir / "manifest.json";
    save_manifest(manifest, manifest_path);
    return manifest_path;
}

}  // namespace vglove
