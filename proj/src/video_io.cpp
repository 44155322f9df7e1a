// Copyright 2026 The vcx Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "vcx/video_io.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstring>
#include <sstream>

namespace vcx {

const char* chroma_format_name(ChromaFormat f) {
    switch (f) {
        case ChromaFormat::C420: return "420";
        case ChromaFormat::C422: return "422";
        case ChromaFormat::C444: return "444";
    }
    return "?";
}

ChromaFormat parse_chroma_format(const std::string& s) {
    if (s == "420") return ChromaFormat::C420;
    if (s == "422") return ChromaFormat::C422;
    if (s == "444") return ChromaFormat::C444;
    throw ConfigError("unknown chroma format '" + s + "' (expected 420, 422 or 444)");
}

void VideoSpec::validate() const {
    if (width < 1 || height < 1)
        throw ConfigError("frame dimensions must be at least 1x1, got " +
                          std::to_string(width) + "x" + std::to_string(height));
    if (bit_depth != 8)
        throw ConfigError("unsupported bit depth " + std::to_string(bit_depth) +
                          " (only 8-bit input is analyzed)");
}

std::size_t VideoSpec::chroma_plane_bytes() const {
    const std::size_t cw = (chroma == ChromaFormat::C444) ? std::size_t(width)
                                                          : std::size_t(width + 1) / 2;
    const std::size_t ch = (chroma == ChromaFormat::C420) ? std::size_t(height + 1) / 2
                                                          : std::size_t(height);
    return cw * ch;
}

std::string BlockGrid::describe() const {
    std::ostringstream os;
    os << blocks_per_row << "x" << blocks_per_col << " blocks of " << block_size;
    return os.str();
}

BlockGrid make_block_grid(int width, int height, int block_size) {
    if (block_size < 4 || !std::has_single_bit(unsigned(block_size)))
        throw ConfigError("block size must be a power of two >= 4, got " +
                          std::to_string(block_size));
    if (width < 1 || height < 1)
        throw ConfigError("cannot partition an empty frame");
    if (block_size > width && block_size > height)
        throw ConfigError("block size " + std::to_string(block_size) +
                          " exceeds both frame dimensions " + std::to_string(width) + "x" +
                          std::to_string(height));
    BlockGrid grid;
    grid.block_size = block_size;
    grid.blocks_per_row = (width + block_size - 1) / block_size;
    grid.blocks_per_col = (height + block_size - 1) / block_size;
    grid.block_count = grid.blocks_per_row * grid.blocks_per_col;
    return grid;
}

void extract_tile(const LumaPlane& plane, const BlockGrid& grid, int block_index, double* out) {
    if (block_index < 0 || block_index >= grid.block_count)
        throw ConfigError("block index " + std::to_string(block_index) + " out of range [0, " +
                          std::to_string(grid.block_count) + ")");
    const int w = grid.block_size;
    const int width = plane.spec.width;
    const int height = plane.spec.height;
    const int ox = (block_index % grid.blocks_per_row) * w;
    const int oy = (block_index / grid.blocks_per_row) * w;

    const int copy_w = std::min(w, width - ox);
    const int copy_h = std::min(w, height - oy);

    for (int y = 0; y < copy_h; ++y) {
        const uint8_t* src = plane.samples.data() + std::size_t(oy + y) * width + ox;
        double* dst = out + std::size_t(y) * w;
        for (int x = 0; x < copy_w; ++x) dst[x] = double(src[x]);
        const double last = dst[copy_w - 1];
        for (int x = copy_w; x < w; ++x) dst[x] = last;
    }
    for (int y = copy_h; y < w; ++y) {
        std::memcpy(out + std::size_t(y) * w, out + std::size_t(copy_h - 1) * w,
                    sizeof(double) * w);
    }
}

namespace {

// Reads one plane of `bytes` from the stream; false on clean EOF at offset 0,
// throws on partial reads.
bool read_exact(std::ifstream& file, char* dst, std::size_t bytes, const std::string& what) {
    file.read(dst, std::streamsize(bytes));
    const auto got = std::size_t(file.gcount());
    if (got == bytes) return true;
    if (got == 0 && file.eof()) return false;
    throw FormatError(what + ": expected " + std::to_string(bytes) + " bytes, got " +
                      std::to_string(got));
}

// Seeking past EOF does not fail an ifstream, so a skip is validated against
// the known file size.
void skip_bytes(std::ifstream& file, std::size_t bytes, uintmax_t file_size,
                const std::string& what) {
    const auto pos = file.tellg();
    if (pos < 0) throw FormatError(what);
    if (uintmax_t(pos) + bytes > file_size)
        throw FormatError(what + ": expected " + std::to_string(bytes) + " bytes, got " +
                          std::to_string(file_size - uintmax_t(pos)));
    file.seekg(std::streamoff(bytes), std::ios::cur);
    if (!file) throw FormatError(what);
}

int parse_int_token(std::string_view token, const std::string& what) {
    int value = 0;
    const auto* begin = token.data();
    const auto* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end)
        throw FormatError(what + ": bad integer '" + std::string(token) + "'");
    return value;
}

}  // namespace

Y4mReader::Y4mReader(const std::filesystem::path& path) : path_(path) {
    std::error_code ec;
    file_size_ = std::filesystem::file_size(path, ec);
    if (ec) throw IoError("cannot stat " + path.string() + ": " + ec.message());
    file_.open(path, std::ios::binary);
    if (!file_) throw IoError("cannot open " + path.string());

    std::string header;
    if (!std::getline(file_, header))
        throw FormatError(path.string() + ": missing YUV4MPEG2 header line");
    if (header.ends_with('\r')) header.pop_back();

    std::istringstream tokens(header);
    std::string magic;
    tokens >> magic;
    if (magic != "YUV4MPEG2")
        throw FormatError(path.string() + ": not a YUV4MPEG2 stream (header starts with '" +
                          magic + "')");

    spec_ = VideoSpec{};
    bool have_w = false, have_h = false;
    std::string tok;
    while (tokens >> tok) {
        if (tok.empty()) continue;
        const char tag = tok[0];
        const std::string_view rest(tok.data() + 1, tok.size() - 1);
        switch (tag) {
            case 'W':
                spec_.width = parse_int_token(rest, path_.string() + ": W parameter");
                have_w = true;
                break;
            case 'H':
                spec_.height = parse_int_token(rest, path_.string() + ": H parameter");
                have_h = true;
                break;
            case 'F': {
                const auto colon = rest.find(':');
                if (colon == std::string_view::npos)
                    throw FormatError(path_.string() + ": malformed frame rate '" + tok + "'");
                const int num = parse_int_token(rest.substr(0, colon), "frame rate numerator");
                const int den = parse_int_token(rest.substr(colon + 1), "frame rate denominator");
                if (num <= 0 || den <= 0)
                    throw FormatError(path_.string() + ": non-positive frame rate '" + tok + "'");
                spec_.frame_rate = double(num) / double(den);
                break;
            }
            case 'C': {
                const std::string cs(rest);
                if (cs == "420" || cs == "420jpeg" || cs == "420mpeg2")
                    spec_.chroma = ChromaFormat::C420;
                else if (cs == "422")
                    spec_.chroma = ChromaFormat::C422;
                else if (cs == "444")
                    spec_.chroma = ChromaFormat::C444;
                else
                    throw FormatError(path_.string() + ": unsupported colorspace tag 'C" + cs +
                                      "'");
                break;
            }
            case 'I':
            case 'A':
            case 'X':
                break;  // interlacing, aspect, comments: ignored
            default:
                throw FormatError(path_.string() + ": unknown header parameter '" + tok + "'");
        }
    }
    if (!have_w || !have_h)
        throw FormatError(path_.string() + ": header is missing W or H");
    spec_.validate();
}

std::optional<LumaPlane> Y4mReader::next() {
    std::string frame_line;
    if (!std::getline(file_, frame_line)) {
        if (file_.eof()) return std::nullopt;
        throw FormatError(path_.string() + ": read failure before frame " +
                          std::to_string(next_index_));
    }
    if (!frame_line.starts_with("FRAME"))
        throw FormatError(path_.string() + ": expected FRAME marker before frame " +
                          std::to_string(next_index_) + ", got '" + frame_line + "'");

    LumaPlane plane;
    plane.spec = spec_;
    plane.frame_index = next_index_;
    plane.samples.resize(spec_.luma_bytes());
    const std::string what =
        path_.string() + ": truncated payload in frame " + std::to_string(next_index_);
    if (!read_exact(file_, reinterpret_cast<char*>(plane.samples.data()), plane.samples.size(),
                    what))
        throw FormatError(what);
    skip_bytes(file_, 2 * spec_.chroma_plane_bytes(), file_size_, what);
    ++next_index_;
    return plane;
}

std::unique_ptr<FrameReader> open_y4m(const std::filesystem::path& path) {
    return std::make_unique<Y4mReader>(path);
}

RawYuvReader::RawYuvReader(const std::filesystem::path& path, const VideoSpec& spec)
    : path_(path), spec_(spec) {
    spec_.validate();
    std::error_code ec;
    const auto size = std::filesystem::file_size(path, ec);
    if (ec) throw IoError("cannot stat " + path.string() + ": " + ec.message());

    const auto frame = spec_.frame_bytes();
    if (size % frame != 0)
        throw FormatError(path.string() + ": file size " + std::to_string(size) +
                          " is not a multiple of the frame size " + std::to_string(frame));
    frame_count_ = int64_t(size / frame);

    file_.open(path, std::ios::binary);
    if (!file_) throw IoError("cannot open " + path.string());
}

std::optional<LumaPlane> RawYuvReader::next() {
    if (next_index_ >= frame_count_) return std::nullopt;

    LumaPlane plane;
    plane.spec = spec_;
    plane.frame_index = next_index_;
    plane.samples.resize(spec_.luma_bytes());
    const std::string what =
        path_.string() + ": truncated payload in frame " + std::to_string(next_index_);
    if (!read_exact(file_, reinterpret_cast<char*>(plane.samples.data()), plane.samples.size(),
                    what))
        throw FormatError(what);
    skip_bytes(file_, 2 * spec_.chroma_plane_bytes(),
               uintmax_t(frame_count_) * spec_.frame_bytes(), what);
    ++next_index_;
    return plane;
}

std::unique_ptr<FrameReader> open_raw_yuv(const std::filesystem::path& path,
                                          const VideoSpec& spec) {
    return std::make_unique<RawYuvReader>(path, spec);
}

}  // namespace vcx
