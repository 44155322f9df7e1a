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

// Deterministic synthetic clips and stream writers shared by the test suites.

#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "vcx/video_io.hpp"

namespace fixtures {

using vcx::ChromaFormat;
using vcx::LumaPlane;
using vcx::VideoSpec;

inline VideoSpec spec(int width, int height, ChromaFormat chroma = ChromaFormat::C420) {
    VideoSpec s;
    s.width = width;
    s.height = height;
    s.chroma = chroma;
    return s;
}

inline LumaPlane make_plane(const VideoSpec& s, int64_t poc,
                            const std::function<uint8_t(int x, int y)>& fill) {
    LumaPlane plane;
    plane.spec = s;
    plane.frame_index = poc;
    plane.samples.resize(s.luma_bytes());
    for (int y = 0; y < s.height; ++y)
        for (int x = 0; x < s.width; ++x)
            plane.samples[std::size_t(y) * s.width + x] = fill(x, y);
    return plane;
}

inline LumaPlane constant_plane(const VideoSpec& s, uint8_t value, int64_t poc = 0) {
    return make_plane(s, poc, [value](int, int) { return value; });
}

inline LumaPlane noise_plane(const VideoSpec& s, uint64_t seed, int lo = 0, int hi = 255,
                             int64_t poc = 0) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dist(lo, hi);
    return make_plane(s, poc, [&](int, int) { return uint8_t(dist(rng)); });
}

// A frame of constant-valued blocks: pixel = values[(y/w)*cols + (x/w)], so the
// block energy map mirrors `values` up to the fixed DC scale factor.
inline LumaPlane mosaic_plane(const VideoSpec& s, int block_size,
                              const std::vector<uint8_t>& values, int64_t poc = 0) {
    const int cols = (s.width + block_size - 1) / block_size;
    return make_plane(s, poc, [&](int x, int y) {
        return values[std::size_t(y / block_size) * cols + std::size_t(x / block_size)];
    });
}

// Toroidal horizontal shift: out(x, y) = in((x - shift) mod width, y).
inline LumaPlane shifted_plane(const LumaPlane& in, int shift_px, int64_t poc) {
    const int w = in.spec.width;
    return make_plane(in.spec, poc, [&](int x, int y) {
        const int sx = ((x - shift_px) % w + w) % w;
        return in.at(sx, y);
    });
}

inline std::vector<LumaPlane> translating_clip(const LumaPlane& base, int frames,
                                               int shift_px_per_frame) {
    std::vector<LumaPlane> clip;
    clip.reserve(std::size_t(frames));
    for (int i = 0; i < frames; ++i)
        clip.push_back(shifted_plane(base, i * shift_px_per_frame, i));
    return clip;
}

inline void write_y4m(const std::filesystem::path& path, const std::vector<LumaPlane>& planes,
                      const std::string& colorspace = "420") {
    std::ofstream file(path, std::ios::binary);
    const auto& s = planes.front().spec;
    file << "YUV4MPEG2 W" << s.width << " H" << s.height << " F30:1 C" << colorspace << "\n";
    for (const auto& plane : planes) {
        file << "FRAME\n";
        file.write(reinterpret_cast<const char*>(plane.samples.data()),
                   std::streamsize(plane.samples.size()));
        const std::vector<char> chroma(plane.spec.chroma_plane_bytes(), char(128));
        file.write(chroma.data(), std::streamsize(chroma.size()));
        file.write(chroma.data(), std::streamsize(chroma.size()));
    }
}

inline void write_raw(const std::filesystem::path& path, const std::vector<LumaPlane>& planes) {
    std::ofstream file(path, std::ios::binary);
    for (const auto& plane : planes) {
        file.write(reinterpret_cast<const char*>(plane.samples.data()),
                   std::streamsize(plane.samples.size()));
        const std::vector<char> chroma(plane.spec.chroma_plane_bytes(), char(128));
        file.write(chroma.data(), std::streamsize(chroma.size()));
        file.write(chroma.data(), std::streamsize(chroma.size()));
    }
}

/// In-memory frame source for analyzer-level tests.
class MemoryReader final : public vcx::FrameReader {
public:
    explicit MemoryReader(std::vector<LumaPlane> planes)
        : planes_(std::move(planes)), spec_(planes_.front().spec) {}

    std::optional<LumaPlane> next() override {
        if (next_ >= planes_.size()) return std::nullopt;
        return planes_[next_++];
    }
    const VideoSpec& spec() const override { return spec_; }

private:
    std::vector<LumaPlane> planes_;
    VideoSpec spec_;
    std::size_t next_ = 0;
};

/// Procedural frame source; generates frames on demand so long high-resolution
/// clips need no backing storage.
class GeneratedReader final : public vcx::FrameReader {
public:
    GeneratedReader(const VideoSpec& s, int64_t frames,
                    std::function<uint8_t(int64_t poc, int x, int y)> pixel)
        : spec_(s), frames_(frames), pixel_(std::move(pixel)) {}

    std::optional<LumaPlane> next() override {
        if (next_ >= frames_) return std::nullopt;
        const int64_t poc = next_++;
        return make_plane(spec_, poc, [&](int x, int y) { return pixel_(poc, x, y); });
    }
    const VideoSpec& spec() const override { return spec_; }

private:
    VideoSpec spec_;
    int64_t frames_ = 0;
    std::function<uint8_t(int64_t, int, int)> pixel_;
    int64_t next_ = 0;
};

/// Unique scratch directory under the system temp dir, removed on destruction.
class TempDir {
public:
    explicit TempDir(const std::string& tag) {
        auto base = std::filesystem::temp_directory_path();
        for (int i = 0; i < 10000; ++i) {
            auto candidate = base / (tag + "_" + std::to_string(i));
            std::error_code ec;
            if (std::filesystem::create_directory(candidate, ec)) {
                path_ = candidate;
                return;
            }
        }
        throw std::runtime_error("cannot create temp dir for " + tag);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
};

}  // namespace fixtures
