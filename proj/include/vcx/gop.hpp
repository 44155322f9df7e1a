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
#include <optional>

#include "vcx/types.hpp"

namespace vcx {

/// Sequence-level complexity weights per frame class.
struct LayerWeights {
    double w_intra = 0.11;
    double w_l0 = 0.04;
    double w_l1 = 0.0001;
    double w_l2 = 0.0005;  // also applied to layers deeper than 2

    void validate() const;
    bool operator==(const LayerWeights&) const = default;
};

/// Dyadic hierarchical reference structure (x264-style closed GOP).
/// Classification is purely arithmetic on the display index.
struct GopStructure {
    int gop_size = 4;       // power of two >= 2
    int intra_period = 250; // 0 = first frame only; I-frames need not align with anchors
    LayerWeights weights;

    /// Depth of the dyadic hierarchy: log2(gop_size) + 1 layers (layer 0 = anchors).
    int layer_count() const;

    void validate() const;
};

enum class FrameKind : uint8_t { Intra, Inter };

struct FrameClass {
    FrameKind kind = FrameKind::Intra;
    int layer = -1;                     // valid for Inter frames only
    std::optional<int64_t> reference;   // filled by the pipeline, absent for Intra

    bool is_intra() const { return kind == FrameKind::Intra; }
};

/// I/layer classification of the frame at display index `poc`.
FrameClass classify(int64_t poc, const GopStructure& structure);

/// Display index of the reference frame for an Inter frame: the nearest frame
/// of strictly lower layer (or Intra) within [0, poc + gop_size], ties broken
/// toward the past. Throws ConfigError for Intra frames.
int64_t select_reference(int64_t poc, const GopStructure& structure);

/// Same, but candidates are limited to [0, frame_count); frames after the last
/// anchor of a truncated sequence fall back to the nearest valid past candidate.
int64_t select_reference(int64_t poc, const GopStructure& structure, int64_t frame_count);

}  // namespace vcx
