#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <random>
#include <string>

#include "vglove/hand.hpp"
#include "vglove/image.hpp"
#include "vglove/manifest.hpp"

namespace vglove {

/// Generator parameters. Hand and background depth ranges are kept disjoint
/// across the segmentation threshold so depth thresholding is exact on
/// synthetic data.
struct SynthParams {
    int width = 640;
    int height = 480;
    double palm_radius_min = 40, palm_radius_max = 60;     // px, before scale
    double finger_len_min = 70, finger_len_max = 110;      // px, before scale
    double finger_width_min = 14, finger_width_max = 22;   // px, before scale
    double rotation_deg_min = -30, rotation_deg_max = 30;
    double translation_px_min = -40, translation_px_max = 40;
    double scale_min = 0.8, scale_max = 1.2;
    int hand_depth_min_mm = 300, hand_depth_max_mm = 450;
    int bg_depth_min_mm = 800, bg_depth_max_mm = 2000;
    double depth_noise_sigma_mm = 2.0;
    std::uint64_t seed = 42;

    // Checks the depth-separation invariant against a threshold/margin.
    void validate(int threshold_mm, int margin_mm = 10) const;
    std::string to_json() const;
    static SynthParams from_json(const std::string& text);
};

struct SynthSample {
    RgbdFrame frame;
    HandKeypoints keypoints;
    GestureLabel label = GestureLabel::OneFinger;
    BinaryMask truth_mask;  // exact rasterized hand region
};

// Renders one frame: palm disc plus finger capsules, with extended-finger
// sets per gesture. Deterministic given (label, params, rng state).
SynthSample synth_frame(GestureLabel label, const SynthParams& params, std::mt19937_64& rng);

// Per-frame rng substream derived from (params.seed, frame_id).
std::mt19937_64 frame_rng(const SynthParams& params, std::int64_t frame_id);

// Writes frames, keypoint files and a manifest with exactly the requested
// per-label counts; deterministic train/validation/test split from the seed.
std::filesystem::path synth_dataset(const std::array<int, kGestureCount>& counts_per_label,
                                    const SynthParams& params,
                                    const std::filesystem::path& out_dir,
                                    double train_frac = 0.8, double val_frac = 0.1);

}  // namespace vglove
