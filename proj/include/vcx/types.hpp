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

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace vcx {

/// Base class for everything this library throws.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid parameters or configuration (maps to CLI usage errors).
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Malformed or truncated input data.
class FormatError : public Error {
public:
    using Error::Error;
};

/// Failed file system operation, message carries the path.
class IoError : public Error {
public:
    using Error::Error;
};

enum class ChromaFormat : uint8_t { C420, C422, C444 };

const char* chroma_format_name(ChromaFormat f);
ChromaFormat parse_chroma_format(const std::string& s);

/// Geometry of one input video. Chroma layout is tracked only to know how many
/// bytes to skip between luma planes; all analysis is luma-only.
struct VideoSpec {
    int width = 0;
    int height = 0;
    double frame_rate = 25.0;  // informational
    int bit_depth = 8;
    ChromaFormat chroma = ChromaFormat::C420;

    void validate() const;

    std::size_t luma_bytes() const { return std::size_t(width) * std::size_t(height); }
    std::size_t chroma_plane_bytes() const;
    std::size_t frame_bytes() const { return luma_bytes() + 2 * chroma_plane_bytes(); }

    bool operator==(const VideoSpec&) const = default;
};

/// One frame's luminance samples, row-major, 8-bit.
struct LumaPlane {
    VideoSpec spec;
    std::vector<uint8_t> samples;  // spec.width * spec.height
    int64_t frame_index = 0;       // display order (POC)

    uint8_t at(int x, int y) const { return samples[std::size_t(y) * spec.width + x]; }
};

/// Block-grid geometry a frame is partitioned into. Edge blocks whose footprint
/// exceeds the frame are padded by edge replication, so every block is a full
/// block_size x block_size tile.
struct BlockGrid {
    int block_size = 0;
    int blocks_per_row = 0;
    int blocks_per_col = 0;
    int block_count = 0;

    bool operator==(const BlockGrid&) const = default;

    std::string describe() const;
};

/// Builds the grid for a frame. block_size must be a power of two >= 4 and not
/// exceed both frame dimensions.
BlockGrid make_block_grid(int width, int height, int block_size);

/// Copies block `block_index` (raster order) into `out` as block_size^2 doubles,
/// replicating the rightmost column / bottom row where the block footprint
/// leaves the frame.
void extract_tile(const LumaPlane& plane, const BlockGrid& grid, int block_index, double* out);

}  // namespace vcx
