#include "vglove/codec.hpp"

#include <cctype>
#include <fstream>

namespace vglove {

RgbdFrame::RgbdFrame(RgbFrame c, DepthFrame d, std::int64_t id)
    : color(std::move(c)), depth(std::move(d)), frame_id(id) {
    if (color.width != depth.width || color.height != depth.height) {
        throw DataError("frame pair dimension mismatch: color " + std::to_string(color.width) +
                        "x" + std::to_string(color.height) + " vs depth " +
                        std::to_string(depth.width) + "x" + std::to_string(depth.height));
    }
}

std::size_t BinaryMask::count_ones() const {
    std::size_t n = 0;
    for (auto b : bits) n += b;
    return n;
}

DecodeError::DecodeError(const std::string& msg, std::size_t off)
    : DataError(msg + " (at byte " + std::to_string(off) + ")"), offset(off) {}

namespace {

// Cursor over a Netpbm header. Whitespace separates tokens; '#' starts a
// comment running to end of line.
struct Cursor {
    const std::vector<std::uint8_t>& buf;
    std::size_t pos = 0;

    void skip_space_and_comments() {
        while (pos < buf.size()) {
            if (std::isspace(buf[pos])) {
                ++pos;
            } else if (buf[pos] == '#') {
                while (pos < buf.size() && buf[pos] != '\n') ++pos;
            } else {
                break;
            }
        }
    }

    long read_uint(const char* what) {
        skip_space_and_comments();
        if (pos >= buf.size() || !std::isdigit(buf[pos]))
            throw DecodeError(std::string("expected ") + what, pos);
        long v = 0;
        while (pos < buf.size() && std::isdigit(buf[pos])) {
            v = v * 10 + (buf[pos] - '0');
            if (v > 1'000'000'000L) throw DecodeError(std::string(what) + " out of range", pos);
            ++pos;
        }
        return v;
    }
};

// Parses "P{n} w h maxval" and leaves the cursor just past the single
// whitespace byte that terminates the header.
struct PnmHeader {
    int width, height;
    long maxval;
    std::size_t payload_offset;
};

PnmHeader parse_header(const std::vector<std::uint8_t>& bytes, char magic2) {
    if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != magic2)
        throw DecodeError(std::string("bad magic, expected P") + magic2, 0);
    Cursor c{bytes, 2};
    long w = c.read_uint("width");
    long h = c.read_uint("height");
    long maxval = c.read_uint("maxval");
    if (w <= 0 || h <= 0) throw DecodeError("non-positive dimensions", c.pos);
    if (c.pos >= bytes.size() || !std::isspace(bytes[c.pos]))
        throw DecodeError("missing whitespace after maxval", c.pos);
    ++c.pos;
    return {static_cast<int>(w), static_cast<int>(h), maxval, c.pos};
}

void append_header(std::vector<std::uint8_t>& out, const char* magic, int w, int h, long maxval) {
    std::string hdr = std::string(magic) + "\n" + std::to_string(w) + " " + std::to_string(h) +
                      "\n" + std::to_string(maxval) + "\n";
    out.insert(out.end(), hdr.begin(), hdr.end());
}

}  // namespace

RgbFrame decode_rgb(const std::vector<std::uint8_t>& bytes) {
    PnmHeader h = parse_header(bytes, '6');
    if (h.maxval != 255) throw DecodeError("maxval must be 255", h.payload_offset);
    std::size_t need = static_cast<std::size_t>(3) * h.width * h.height;
    if (bytes.size() - h.payload_offset < need)
        throw DecodeError("truncated pixel payload", bytes.size());
    RgbFrame f(h.width, h.height);
    std::copy(bytes.begin() + h.payload_offset, bytes.begin() + h.payload_offset + need,
              f.pixels.begin());
    return f;
}

std::vector<std::uint8_t> encode_rgb(const RgbFrame& frame) {
    std::vector<std::uint8_t> out;
    out.reserve(frame.pixels.size() + 32);
    append_header(out, "P6", frame.width, frame.height, 255);
    out.insert(out.end(), frame.pixels.begin(), frame.pixels.end());
    return out;
}

DepthFrame decode_depth(const std::vector<std::uint8_t>& bytes) {
    PnmHeader h = parse_header(bytes, '5');
    if (h.maxval != 65535) throw DecodeError("16-bit depth required (maxval must be 65535)", h.payload_offset);
    std::size_t need = static_cast<std::size_t>(2) * h.width * h.height;
    if (bytes.size() - h.payload_offset < need)
        throw DecodeError("truncated depth payload", bytes.size());
    DepthFrame f(h.width, h.height);
    const std::uint8_t* p = bytes.data() + h.payload_offset;
    for (auto& d : f.depths) {
        d = static_cast<std::uint16_t>((p[0] << 8) | p[1]);
        p += 2;
    }
    return f;
}

std::vector<std::uint8_t> encode_depth(const DepthFrame& frame) {
    std::vector<std::uint8_t> out;
    out.reserve(2 * frame.depths.size() + 32);
    append_header(out, "P5", frame.width, frame.height, 65535);
    for (auto d : frame.depths) {
        out.push_back(static_cast<std::uint8_t>(d >> 8));
        out.push_back(static_cast<std::uint8_t>(d & 0xff));
    }
    return out;
}

BinaryMask decode_mask(const std::vector<std::uint8_t>& bytes) {
    PnmHeader h = parse_header(bytes, '5');
    if (h.maxval != 255) throw DecodeError("mask maxval must be 255", h.payload_offset);
    std::size_t need = static_cast<std::size_t>(h.width) * h.height;
    if (bytes.size() - h.payload_offset < need)
        throw DecodeError("truncated mask payload", bytes.size());
    BinaryMask m(h.width, h.height);
    for (std::size_t i = 0; i < need; ++i)
        m.bits[i] = bytes[h.payload_offset + i] ? 1 : 0;
    return m;
}

std::vector<std::uint8_t> encode_mask(const BinaryMask& mask) {
    std::vector<std::uint8_t> out;
    out.reserve(mask.bits.size() + 32);
    append_header(out, "P5", mask.width, mask.height, 255);
    for (auto b : mask.bits) out.push_back(b ? 255 : 0);
    return out;
}

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open file: " + path.string());
    return std::vector<std::uint8_t>(std::istreambuf_iterator<char>(in),
                                     std::istreambuf_iterator<char>());
}

void write_file(const std::filesystem::path& path, const std::vector<std::uint8_t>& bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw DataError("cannot open file for writing: " + path.string());
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) throw DataError("short write: " + path.string());
}

RgbdFrame load_frame_pair(const std::filesystem::path& color_path,
                          const std::filesystem::path& depth_path, std::int64_t frame_id) {
    RgbFrame color = decode_rgb(read_file(color_path));
    DepthFrame depth = decode_depth(read_file(depth_path));
    return RgbdFrame(std::move(color), std::move(depth), frame_id);
}

}  // namespace vglove
