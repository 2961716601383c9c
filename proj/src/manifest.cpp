#include "vglove/manifest.hpp"

#include "json.hpp"
#include "vglove/codec.hpp"

namespace vglove {

const char* label_name(GestureLabel label) {
    switch (label) {
        case GestureLabel::OneFinger: return "one_finger";
        case GestureLabel::TwoFingers: return "two_fingers";
        case GestureLabel::Thumb: return "thumb";
        case GestureLabel::Shaka: return "shaka";
        case GestureLabel::Ok: return "ok";
    }
    throw DataError("bad gesture label code");
}

const char* label_display_name(GestureLabel label) {
    switch (label) {
        case GestureLabel::OneFinger: return "One Finger";
        case GestureLabel::TwoFingers: return "Two Finger";
        case GestureLabel::Thumb: return "Thumb";
        case GestureLabel::Shaka: return "Shaka";
        case GestureLabel::Ok: return "OK";
    }
    throw DataError("bad gesture label code");
}

GestureLabel label_from_name(const std::string& name) {
    for (int i = 0; i < kGestureCount; ++i) {
        auto l = static_cast<GestureLabel>(i);
        if (name == label_name(l)) return l;
    }
    throw DataError("unknown gesture label: " + name);
}

const char* split_name(Split s) {
    switch (s) {
        case Split::Train: return "train";
        case Split::Validation: return "validation";
        case Split::Test: return "test";
    }
    throw DataError("bad split code");
}

Split split_from_name(const std::string& name) {
    if (name == "train") return Split::Train;
    if (name == "validation") return Split::Validation;
    if (name == "test") return Split::Test;
    throw DataError("unknown split: " + name);
}

std::vector<const ManifestRecord*> Manifest::select(Split split) const {
    std::vector<const ManifestRecord*> out;
    for (const auto& r : records)
        if (r.split == split) out.push_back(&r);
    return out;
}

Manifest load_manifest(const std::filesystem::path& path) {
    auto bytes = read_file(path);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(bytes.begin(), bytes.end());
    } catch (const nlohmann::json::exception& e) {
        throw DataError(std::string("manifest parse error: ") + e.what());
    }
    Manifest m;
    m.dir = path.parent_path();
    if (j.contains("params")) m.params_json = j["params"].dump();
    if (!j.contains("records") || !j["records"].is_array())
        throw DataError("manifest missing \"records\" array");
    for (const auto& r : j["records"]) {
        ManifestRecord rec;
        rec.frame_id = r.at("frame_id").get<std::int64_t>();
        rec.color_path = r.at("color_path").get<std::string>();
        rec.depth_path = r.at("depth_path").get<std::string>();
        rec.keypoints_path = r.at("keypoints_path").get<std::string>();
        rec.label = label_from_name(r.at("label").get<std::string>());
        rec.split = split_from_name(r.value("split", std::string("train")));
        m.records.push_back(std::move(rec));
    }
    return m;
}

void save_manifest(const Manifest& m, const std::filesystem::path& path) {
    nlohmann::json records = nlohmann::json::array();
    for (const auto& r : m.records) {
        records.push_back({{"frame_id", r.frame_id},
                           {"color_path", r.color_path},
                           {"depth_path", r.depth_path},
                           {"keypoints_path", r.keypoints_path},
                           {"label", label_name(r.label)},
                           {"split", split_name(r.split)}});
    }
    nlohmann::json j{{"records", records}};
    if (!m.params_json.empty()) j["params"] = nlohmann::json::parse(m.params_json);
    std::string text = j.dump(2);
    text.push_back('\n');
    write_file(path, std::vector<std::uint8_t>(text.begin(), text.end()));
}

}  // namespace vglove
