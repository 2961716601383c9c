#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "vglove/image.hpp"

namespace vglove {

/// The five gesture classes, stable integer codes 0-4.
enum class GestureLabel : int { OneFinger = 0, TwoFingers = 1, Thumb = 2, Shaka = 3, Ok = 4 };

inline constexpr int kGestureCount = 5;

const char* label_name(GestureLabel label);          // manifest token, e.g. "one_finger"
const char* label_display_name(GestureLabel label);  // table heading, e.g. "One Finger"
GestureLabel label_from_name(const std::string& name);

enum class Split { Train, Validation, Test };
const char* split_name(Split s);
Split split_from_name(const std::string& name);

struct ManifestRecord {
    std::int64_t frame_id = 0;
    std::string color_path;      // relative to the manifest directory
    std::string depth_path;
    std::string keypoints_path;
    GestureLabel label = GestureLabel::OneFinger;
    Split split = Split::Train;
};

/// Dataset index: one JSON document listing all records plus the generator
/// parameters used (for provenance).
struct Manifest {
    std::filesystem::path dir;  // directory the relative paths resolve against
    std::vector<ManifestRecord> records;
    std::string params_json;  // verbatim generator params block, may be empty

    std::filesystem::path resolve(const std::string& rel) const { return dir / rel; }
    std::vector<const ManifestRecord*> select(Split split) const;
};

Manifest load_manifest(const std::filesystem::path& path);
void save_manifest(const Manifest& m, const std::filesystem::path& path);

}  // namespace vglove
