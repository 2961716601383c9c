#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "vglove/image.hpp"

namespace vglove {

/// Malformed or truncated image stream. Message names the byte offset.
class DecodeError : public DataError {
public:
    DecodeError(const std::string& msg, std::size_t offset);
    std::size_t offset;
};

// Binary PPM, magic "P6", maxval 255.
RgbFrame decode_rgb(const std::vector<std::uint8_t>& bytes);
std::vector<std::uint8_t> encode_rgb(const RgbFrame& frame);

// Binary PGM, magic "P5", maxval 65535, big-endian samples, value = millimetres.
DepthFrame decode_depth(const std::vector<std::uint8_t>& bytes);
std::vector<std::uint8_t> encode_depth(const DepthFrame& frame);

// Masks travel as P5 maxval 255 with samples 0/255.
BinaryMask decode_mask(const std::vector<std::uint8_t>& bytes);
std::vector<std::uint8_t> encode_mask(const BinaryMask& mask);

std::vector<std::uint8_t> read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::vector<std::uint8_t>& bytes);

RgbdFrame load_frame_pair(const std::filesystem::path& color_path,
                          const std::filesystem::path& depth_path,
                          std::int64_t frame_id);

}  // namespace vglove
