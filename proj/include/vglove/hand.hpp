#pragma once

#include <array>
#include <cstdint>
#include <deque>
#include <filesystem>
#include <memory>
#include <vector>

#include "vglove/distance.hpp"
#include "vglove/image.hpp"

namespace vglove {

/// 21-point hand landmark topology (wrist=0, then four joints per digit).
namespace landmark {
inline constexpr int kWrist = 0;
inline constexpr int kThumbCmc = 1, kThumbMcp = 2, kThumbIp = 3, kThumbTip = 4;
inline constexpr int kIndexMcp = 5, kIndexPip = 6, kIndexDip = 7, kIndexTip = 8;
inline constexpr int kMiddleMcp = 9, kMiddlePip = 10, kMiddleDip = 11, kMiddleTip = 12;
inline constexpr int kRingMcp = 13, kRingPip = 14, kRingDip = 15, kRingTip = 16;
inline constexpr int kPinkyMcp = 17, kPinkyPip = 18, kPinkyDip = 19, kPinkyTip = 20;
inline constexpr int kCount = 21;
}  // namespace landmark

struct Landmark {
    float x = 0.f;  // normalized to [0,1] by frame width; may exceed when off-frame
    float y = 0.f;  // normalized by frame height
    friend bool operator==(const Landmark&, const Landmark&) = default;
};

struct HandKeypoints {
    std::int64_t frame_id = 0;
    std::array<Landmark, landmark::kCount> landmarks{};
    friend bool operator==(const HandKeypoints&, const HandKeypoints&) = default;
};

/// Palm center and radius in pixels; invalid when the frame has no foreground.
struct PalmEstimate {
    int center_row = 0;
    int center_col = 0;
    int radius = 0;
    bool valid = false;
    friend bool operator==(const PalmEstimate&, const PalmEstimate&) = default;
};

// Argmax of the distance map; ties broken by smallest row, then column.
// radius = the maximum value. Invalid iff the map is all zero.
PalmEstimate estimate_palm(const DistanceMap& dmap);

/// Trailing mean over up to the last `window` valid estimates. An invalid
/// estimate clears the buffer so the palm never averages across a
/// disappearance. Single-owner, one per hand stream.
class PalmSmoother {
public:
    explicit PalmSmoother(int window = 5);

    PalmEstimate push(const PalmEstimate& est);
    void reset() { buffer_.clear(); }
    int window() const { return window_; }

private:
    int window_;
    std::deque<PalmEstimate> buffer_;
};

// Keypoint JSON: {"frame_id": n, "landmarks": [[x,y] x21]}.
HandKeypoints load_keypoints(const std::filesystem::path& path);
void save_keypoints(const HandKeypoints& kps, const std::filesystem::path& path);
HandKeypoints parse_keypoints(const std::string& json_text);
std::string keypoints_to_json(const HandKeypoints& kps);

/// Per-frame keypoint source, aligned with the frame stream by frame_id.
class KeypointProvider {
public:
    virtual ~KeypointProvider() = default;
    // Throws DataError naming the id when no keypoints exist for it.
    virtual HandKeypoints fetch(std::int64_t frame_id) = 0;
};

/// Replays recorded keypoint files (paths keyed by frame_id).
class RecordedKeypointProvider : public KeypointProvider {
public:
    void add(std::int64_t frame_id, std::filesystem::path path);
    HandKeypoints fetch(std::int64_t frame_id) override;

private:
    std::vector<std::pair<std::int64_t, std::filesystem::path>> entries_;
};

}  // namespace vglove
