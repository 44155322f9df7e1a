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

/// Block-wise absolute energy differences between a frame and its reference.
struct SadMap {
    int64_t frame_index = 0;
    int64_t reference_index = 0;
    BlockGrid grid;
    std::vector<double> values;  // |H_cur[k] - H_ref[k]|, >= 0
};

/// Requires identical grids; throws ConfigError naming both geometries otherwise.
SadMap sad_map(const EnergyMap& current, const EnergyMap& reference);

/// Per-pixel-normalized temporal feature: sum of block-wise absolute energy
/// differences divided by block_count * block_size^2. The reference may be the
/// previous frame or a structurally selected one; the arithmetic is the same.
double temporal_feature(const EnergyMap& current, const EnergyMap& reference);

}  // namespace vcx
