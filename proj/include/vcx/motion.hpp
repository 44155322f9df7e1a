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
#include <vector>

#include "vcx/energy.hpp"

namespace vcx {

/// Feature-domain motion estimation parameters.
struct MeParams {
    int window = 8;        // sliding window size in blocks, even and >= 2
    int search_range = 4;  // maximum candidate offset in blocks, >= 1
    bool quantize = false; // 16-bit quantized / squared-similarity fast path

    void validate() const;
};

/// Per-block attenuation factors and the similarities they came from.
/// offset_hor/offset_ver record the argmax candidate offset (0 when no
/// candidate was valid); useful as a coarse motion field.
struct AttenuationMap {
    int64_t frame_index = 0;
    int64_t reference_index = 0;
    BlockGrid grid;
    std::vector<double> mu;      // in [0,1]
    std::vector<double> s_hor;   // in [0,1]
    std::vector<double> s_ver;   // in [0,1]
    std::vector<int16_t> offset_hor;
    std::vector<int16_t> offset_ver;
};

/// Maximum cosine similarity between the window of current-frame energies
/// centered at block k and reference windows shifted by j in [-range, range]
/// along the block row. Candidates whose window leaves the row are skipped; if
/// none is valid the similarity is 0. A zero-norm window matches only another
/// zero-norm window (similarity 1), otherwise contributes 0.
double horiz_similarity(const EnergyMap& current, const EnergyMap& reference,
                        int block_index, const MeParams& params);

/// Same as horiz_similarity with the window running down block k's column
/// (index stride = blocks_per_row).
double vert_similarity(const EnergyMap& current, const EnergyMap& reference,
                       int block_index, const MeParams& params);

/// Piecewise attenuation factor:
///   mu = 1 - (s_hor + s_ver)        when s_hor + s_ver <= 1
///   mu = 1 - max(s_hor, s_ver)      otherwise
/// Inputs must be in [0,1]; the result always is.
double attenuation(double s_hor, double s_ver);

struct AttenuatedTemporal {
    double h = 0.0;
    AttenuationMap map;
};

/// Motion-compensated temporal feature: per-block SAD of energies scaled by the
/// block's attenuation factor, normalized like temporal_feature. Returns the
/// attenuation map for diagnostics/heatmaps. With params.quantize set, energies
/// are quantized to 16 bits and candidates ranked by squared similarity; the
/// exact path is the reference semantics.
AttenuatedTemporal attenuated_temporal_feature(const EnergyMap& current,
                                               const EnergyMap& reference,
                                               const MeParams& params,
                                               int threads = 1);

}  // namespace vcx
