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

#include "vcx/temporal.hpp"

#include <cmath>

#include "vcx/kernels.hpp"

namespace vcx {

namespace {

void require_same_grid(const EnergyMap& current, const EnergyMap& reference) {
    if (current.grid != reference.grid)
        throw ConfigError("energy map grids differ: " + current.grid.describe() + " vs " +
                          reference.grid.describe());
    if (current.values.size() != std::size_t(current.grid.block_count) ||
        reference.values.size() != std::size_t(reference.grid.block_count))
        throw ConfigError("energy map value count does not match its grid");
}

}  // namespace

SadMap sad_map(const EnergyMap& current, const EnergyMap& reference) {
    require_same_grid(current, reference);
    SadMap map;
    map.frame_index = current.frame_index;
    map.reference_index = reference.frame_index;
    map.grid = current.grid;
    map.values.resize(current.values.size());
    for (std::size_t k = 0; k < current.values.size(); ++k)
        map.values[k] = std::fabs(current.values[k] - reference.values[k]);
    return map;
}

double temporal_feature(const EnergyMap& current, const EnergyMap& reference) {
    require_same_grid(current, reference);
    const double sad = kernels::active().sad_sum(current.values.data(), reference.values.data(),
                                                 current.values.size());
    return sad / feature_normalizer(current.grid);
}

}  // namespace vcx
