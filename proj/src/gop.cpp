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

#include "vcx/gop.hpp"

#include <bit>
#include <cstdlib>
#include <limits>

namespace vcx {

void LayerWeights::validate() const {
    if (w_intra < 0 || w_l0 < 0 || w_l1 < 0 || w_l2 < 0)
        throw ConfigError("layer weights must be nonnegative");
}

int GopStructure::layer_count() const {
    return std::bit_width(unsigned(gop_size));  // log2(gop_size) + 1
}

void GopStructure::validate() const {
    if (gop_size < 2 || !std::has_single_bit(unsigned(gop_size)))
        throw ConfigError("GOP size must be a power of two >= 2, got " +
                          std::to_string(gop_size));
    if (intra_period < 0)
        throw ConfigError("intra period must be >= 0, got " + std::to_string(intra_period));
    weights.validate();
}

FrameClass classify(int64_t poc, const GopStructure& structure) {
    if (poc < 0) throw ConfigError("negative display index " + std::to_string(poc));
    structure.validate();

    FrameClass cls;
    if (poc == 0 || (structure.intra_period > 0 && poc % structure.intra_period == 0)) {
        cls.kind = FrameKind::Intra;
        return cls;
    }

    cls.kind = FrameKind::Inter;
    const int offset = int(poc % structure.gop_size);
    if (offset == 0) {
        cls.layer = 0;  // GOP anchor
    } else {
        const int depth = structure.layer_count() - 1;  // log2(gop_size)
        cls.layer = depth - std::countr_zero(unsigned(offset));
    }
    return cls;
}

namespace {

// Layer ordering for reference eligibility; Intra ranks below every layer.
int reference_rank(const FrameClass& cls) {
    return cls.is_intra() ? -1 : cls.layer;
}

int64_t pick_reference(int64_t poc, const GopStructure& structure, int64_t max_candidate) {
    const FrameClass cls = classify(poc, structure);
    if (cls.is_intra())
        throw ConfigError("frame " + std::to_string(poc) +
                          " is Intra and has no reference frame");

    const int own_rank = reference_rank(cls);
    int64_t best = -1;
    int64_t best_distance = std::numeric_limits<int64_t>::max();
    // Ascending scan visits past candidates before future ones, so the strict
    // comparison breaks past/future distance ties toward the past.
    for (int64_t q = 0; q <= max_candidate; ++q) {
        if (q == poc) continue;
        if (reference_rank(classify(q, structure)) >= own_rank) continue;
        const int64_t distance = std::llabs(q - poc);
        if (distance < best_distance) {
            best = q;
            best_distance = distance;
        }
    }
    if (best < 0)
        throw ConfigError("no reference candidate for frame " + std::to_string(poc));
    return best;
}

}  // namespace

int64_t select_reference(int64_t poc, const GopStructure& structure) {
    if (poc < 1) throw ConfigError("frame 0 has no reference frame");
    return pick_reference(poc, structure, poc + structure.gop_size);
}

int64_t select_reference(int64_t poc, const GopStructure& structure, int64_t frame_count) {
    if (poc < 1) throw ConfigError("frame 0 has no reference frame");
    if (poc >= frame_count)
        throw ConfigError("display index " + std::to_string(poc) + " beyond frame count " +
                          std::to_string(frame_count));
    const int64_t max_candidate = std::min(poc + structure.gop_size, frame_count - 1);
    return pick_reference(poc, structure, max_candidate);
}

}  // namespace vcx
