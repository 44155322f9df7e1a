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

#pragma once

#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>

#include "vcx/types.hpp"

namespace vcx {

/// Sequential frame source. Yielded planes are immutable values; downstream
/// consumers may process them concurrently.
class FrameReader {
public:
    virtual ~FrameReader() = default;

    /// Next luma plane in display order, or nullopt at end of stream.
    virtual std::optional<LumaPlane> next() = 0;

    virtual const VideoSpec& spec() const = 0;
};

/// YUV4MPEG2 reader. Parses the stream header (W, H, F, C parameters), then
/// yields the luma plane of each FRAME section; chroma is skipped, not stored.
/// Accepted colorspace tags: C420, C420jpeg, C420mpeg2, C422, C444.
class Y4mReader final : public FrameReader {
public:
    explicit Y4mReader(const std::filesystem::path& path);

    std::optional<LumaPlane> next() override;
    const VideoSpec& spec() const override { return spec_; }

private:
    std::ifstream file_;
    std::filesystem::path path_;
    VideoSpec spec_;
    uintmax_t file_size_ = 0;
    int64_t next_index_ = 0;
};

/// Headerless planar YUV reader (I420/I422/I444), dimensions supplied by the
/// caller. The file size must be an exact multiple of the per-frame byte size.
class RawYuvReader final : public FrameReader {
public:
    RawYuvReader(const std::filesystem::path& path, const VideoSpec& spec);

    std::optional<LumaPlane> next() override;
    const VideoSpec& spec() const override { return spec_; }

    int64_t frame_count() const { return frame_count_; }

private:
    std::ifstream file_;
    std::filesystem::path path_;
    VideoSpec spec_;
    int64_t frame_count_ = 0;
    int64_t next_index_ = 0;
};

std::unique_ptr<FrameReader> open_y4m(const std::filesystem::path& path);
std::unique_ptr<FrameReader> open_raw_yuv(const std::filesystem::path& path, const VideoSpec& spec);

}  // namespace vcx
