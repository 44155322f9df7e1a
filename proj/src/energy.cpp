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

#include "vcx/energy.hpp"

#include <cmath>
#include <numbers>

#include "vcx/kernels.hpp"
#include "vcx/parallel.hpp"

namespace vcx {

DctPlan::DctPlan(int w) : block_size(w) {
    if (w < 4)
        throw ConfigError("DCT plan requires block size >= 4, got " + std::to_string(w));
    basis.resize(std::size_t(w) * w);
    basis_t.resize(std::size_t(w) * w);
    weights.resize(std::size_t(w) * w);

    const double norm0 = std::sqrt(1.0 / w);
    const double norm = std::sqrt(2.0 / w);
    for (int u = 0; u < w; ++u) {
        const double alpha = (u == 0) ? norm0 : norm;
        for (int x = 0; x < w; ++x) {
            const double c = alpha * std::cos(std::numbers::pi * (2 * x + 1) * u / (2.0 * w));
            basis[std::size_t(u) * w + x] = c;
            basis_t[std::size_t(x) * w + u] = c;
        }
    }

    const double ww = double(w) * double(w);
    for (int i = 0; i < w; ++i) {
        for (int j = 0; j < w; ++j) {
            const double r = (double(i) * double(j)) / ww;
            weights[std::size_t(i) * w + j] = std::exp(std::fabs(r * r - 1.0));
        }
    }
}

void DctWorkspace::resize(int w) {
    const auto n = std::size_t(w) * w;
    tile.resize(n);
    tmp.resize(n);
    coeffs.resize(n);
}

void dct2d(const DctPlan& plan, const double* tile, double* coeffs, double* tmp) {
    kernels::active().dct2d(tile, plan.basis.data(), plan.basis_t.data(), plan.block_size, tmp,
                            coeffs);
}

std::vector<double> dct2d(const DctPlan& plan, const std::vector<double>& tile) {
    const auto n = std::size_t(plan.block_size) * plan.block_size;
    if (tile.size() != n)
        throw ConfigError("tile has " + std::to_string(tile.size()) + " samples, expected " +
                          std::to_string(n));
    std::vector<double> coeffs(n), tmp(n);
    dct2d(plan, tile.data(), coeffs.data(), tmp.data());
    return coeffs;
}

double block_energy(const DctPlan& plan, const double* tile, DctWorkspace& ws) {
    ws.resize(plan.block_size);
    dct2d(plan, tile, ws.coeffs.data(), ws.tmp.data());
    return kernels::active().weighted_abs_sum(ws.coeffs.data(), plan.weights.data(),
                                              ws.coeffs.size());
}

double block_energy(const DctPlan& plan, const std::vector<double>& tile) {
    const auto n = std::size_t(plan.block_size) * plan.block_size;
    if (tile.size() != n)
        throw ConfigError("tile has " + std::to_string(tile.size()) + " samples, expected " +
                          std::to_string(n));
    DctWorkspace ws;
    return block_energy(plan, tile.data(), ws);
}

EnergyMap compute_energy_map(const LumaPlane& plane, const DctPlan& plan, int threads) {
    plane.spec.validate();
    if (plane.samples.size() != plane.spec.luma_bytes())
        throw ConfigError("luma plane holds " + std::to_string(plane.samples.size()) +
                          " samples, expected " + std::to_string(plane.spec.luma_bytes()));

    EnergyMap map;
    map.frame_index = plane.frame_index;
    map.grid = make_block_grid(plane.spec.width, plane.spec.height, plan.block_size);
    map.values.resize(map.grid.block_count);

    parallel_for(map.grid.block_count, threads, [&](int64_t begin, int64_t end) {
        DctWorkspace ws;
        ws.resize(plan.block_size);
        for (int64_t k = begin; k < end; ++k) {
            extract_tile(plane, map.grid, int(k), ws.tile.data());
            map.values[std::size_t(k)] = block_energy(plan, ws.tile.data(), ws);
        }
    });
    return map;
}

double feature_normalizer(const BlockGrid& grid) {
    return double(grid.block_count) * double(grid.block_size) * double(grid.block_size);
}

double spatial_feature(const EnergyMap& map) {
    if (map.values.empty()) throw ConfigError("spatial feature of an empty energy map");
    double sum = 0.0;
    for (double v : map.values) sum += v;
    return sum / feature_normalizer(map.grid);
}

}  // namespace vcx
