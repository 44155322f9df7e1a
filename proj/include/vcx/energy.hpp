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

#include "vcx/types.hpp"

namespace vcx {

/// Precomputed tables for one block size: the orthonormal DCT-II basis matrix,
/// its transpose, and the per-coefficient energy weights
/// exp(|((i*j)/w^2)^2 - 1|). The DC coefficient carries weight e.
struct DctPlan {
    int block_size = 0;
    std::vector<double> basis;    // w*w, basis[u*w+x] = alpha(u) * cos(pi*(2x+1)*u / (2w))
    std::vector<double> basis_t;  // transpose of basis
    std::vector<double> weights;  // w*w energy weights

    explicit DctPlan(int block_size);
};

/// Scratch buffers for per-block work; reuse across blocks to avoid allocation
/// in the inner loop.
struct DctWorkspace {
    std::vector<double> tile;
    std::vector<double> tmp;
    std::vector<double> coeffs;

    void resize(int block_size);
};

/// Per-block texture energies of one frame.
struct EnergyMap {
    int64_t frame_index = 0;
    BlockGrid grid;
    std::vector<double> values;  // block_count entries, raster order, >= 0
};

/// Orthonormal type-II 2-D DCT of a square tile (side = plan.block_size).
/// Coefficient (0,0) equals block_size * mean(tile).
void dct2d(const DctPlan& plan, const double* tile, double* coeffs, double* tmp);
std::vector<double> dct2d(const DctPlan& plan, const std::vector<double>& tile);

/// Exponentially weighted sum of absolute DCT coefficients of one tile.
double block_energy(const DctPlan& plan, const double* tile, DctWorkspace& ws);
double block_energy(const DctPlan& plan, const std::vector<double>& tile);

/// Texture energy of every block of a frame. Per-block work is independent and
/// distributed over `threads` workers when threads > 1; results are identical
/// for any thread count.
EnergyMap compute_energy_map(const LumaPlane& plane, const DctPlan& plan, int threads = 1);

/// Per-pixel-normalized spatial feature: sum of block energies divided by
/// block_count * block_size^2.
double spatial_feature(const EnergyMap& map);

/// Shared normalizer for spatial and temporal features.
double feature_normalizer(const BlockGrid& grid);

}  // namespace vcx
