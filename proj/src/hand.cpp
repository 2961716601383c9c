#include "vglove/hand.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "json.hpp"
#include "vglove/codec.hpp"

namespace vglove {

PalmEstimate estimate_palm(const DistanceMap& dmap) {
    PalmEstimate est;
    std::int32_t best = 0;
    for (int r = 0; r < dmap.height; ++r) {
        for (int c = 0; c < dmap.width; ++c) {
            std::int32_t v = dmap.at(r, c);
            if (v > best) {  // strict: first hit wins row-major ties
                best = v;
                est.center_row = r;
                est.center_col = c;
            }
        }
    }
    est.radius = best;
    est.valid = best > 0;
    return est;
}

PalmSmoother::PalmSmoother(int window) : window_(window) {
    if (window < 1) throw DataError("smoothing window must be >= 1");
}

namespace {
// floor(sum/n + 1/2) for non-negative sums.
int mean_half_up(long sum, long n) { return static_cast<int>((2 * sum + n) / (2 * n)); }
}  // namespace

PalmEstimate PalmSmoother::push(const PalmEstimate& est) {
    if (!est.valid) {
        buffer_.clear();
        return est;
    }
    buffer_.push_back(est);
    if (static_cast<int>(buffer_.size()) > window_) buffer_.pop_front();
    long sr = 0, sc = 0, srad = 0;
    for (const auto& e : buffer_) {
        sr += e.center_row;
        sc += e.center_col;
        srad += e.radius;
    }
    long n = static_cast<long>(buffer_.size());
    return PalmEstimate{mean_half_up(sr, n), mean_half_up(sc, n), mean_half_up(srad, n), true};
}

HandKeypoints parse_keypoints(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw DataError(std::string("keypoint JSON parse error: ") + e.what());
    }
    if (!j.contains("landmarks") || !j["landmarks"].is_array())
        throw DataError("keypoint file missing \"landmarks\" array");
    const auto& lm = j["landmarks"];
    if (lm.size() != landmark::kCount)
        throw DataError("expected 21 landmarks, got " + std::to_string(lm.size()));
    HandKeypoints kps;
    kps.frame_id = j.value("frame_id", std::int64_t{0});
    for (std::size_t i = 0; i < lm.size(); ++i) {
        if (!lm[i].is_array() || lm[i].size() != 2 || !lm[i][0].is_number() ||
            !lm[i][1].is_number())
            throw DataError("landmark " + std::to_string(i) + " is not a numeric [x,y] pair");
        float x = lm[i][0].get<float>();
        float y = lm[i][1].get<float>();
        if (!std::isfinite(x) || !std::isfinite(y))
            throw DataError("landmark " + std::to_string(i) + " has a non-finite coordinate");
        kps.landmarks[i] = Landmark{x, y};
    }
    return kps;
}

std::string keypoints_to_json(const HandKeypoints& kps) {
    nlohmann::json lm = nlohmann::json::array();
    for (const auto& p : kps.landmarks) lm.push_back({p.x, p.y});
    nlohmann::json j{{"frame_id", kps.frame_id}, {"landmarks", lm}};
    return j.dump();
}

HandKeypoints load_keypoints(const std::filesystem::path& path) {
    auto bytes = read_file(path);
    return parse_keypoints(std::string(bytes.begin(), bytes.end()));
}

void save_keypoints(const HandKeypoints& kps, const std::filesystem::path& path) {
    std::string text = keypoints_to_json(kps);
    write_file(path, std::vector<std::uint8_t>(text.begin(), text.end()));
}

void RecordedKeypointProvider::add(std::int64_t frame_id, std::filesystem::path path) {
    entries_.emplace_back(frame_id, std::move(path));
}

HandKeypoints RecordedKeypointProvider::fetch(std::int64_t frame_id) {
    for (const auto& [id, path] : entries_) {
        if (id == frame_id) {
            HandKeypoints kps = load_keypoints(path);
            kps.frame_id = frame_id;
            return kps;
        }
    }
    throw DataError("no keypoints for frame_id " + std::to_string(frame_id));
}

}  // namespace vglove
