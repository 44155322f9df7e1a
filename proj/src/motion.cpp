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

#include "vcx/motion.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "vcx/kernels.hpp"
#include "vcx/parallel.hpp"

namespace vcx {

void MeParams::validate() const {
    if (window < 2 || window % 2 != 0)
        throw ConfigError("motion window must be even and >= 2, got " + std::to_string(window));
    if (search_range < 1)
        throw ConfigError("motion search range must be >= 1, got " +
                          std::to_string(search_range));
}

namespace {

void require_same_grid(const EnergyMap& current, const EnergyMap& reference) {
    if (current.grid != reference.grid)
        throw ConfigError("energy map grids differ: " + current.grid.describe() + " vs " +
                          reference.grid.describe());
}

void require_block_index(const EnergyMap& map, int block_index) {
    if (block_index < 0 || block_index >= map.grid.block_count)
        throw ConfigError("block index " + std::to_string(block_index) + " out of range [0, " +
                          std::to_string(map.grid.block_count) + ")");
}

// One row or column of the block grid. `pos` is the center block's position
// within the lane, `limit` the lane length; `stride` walks the values array.
struct LaneView {
    const double* cur = nullptr;  // lane start in the current map
    const double* ref = nullptr;  // lane start in the reference map
    std::ptrdiff_t stride = 1;
    int pos = 0;
    int limit = 0;
};

LaneView row_lane(const EnergyMap& current, const EnergyMap& reference, int k) {
    const int w = current.grid.blocks_per_row;
    LaneView lane;
    lane.cur = current.values.data() + std::size_t(k / w) * w;
    lane.ref = reference.values.data() + std::size_t(k / w) * w;
    lane.stride = 1;
    lane.pos = k % w;
    lane.limit = w;
    return lane;
}

LaneView column_lane(const EnergyMap& current, const EnergyMap& reference, int k) {
    const int w = current.grid.blocks_per_row;
    LaneView lane;
    lane.cur = current.values.data() + k % w;
    lane.ref = reference.values.data() + k % w;
    lane.stride = w;
    lane.pos = k / w;
    lane.limit = current.grid.blocks_per_col;
    return lane;
}

struct SimResult {
    double s = 0.0;
    int offset = 0;
};

struct SimWorkspace {
    std::vector<double> cur;
    std::vector<double> ref;
    std::vector<uint32_t> qcur;
    std::vector<uint32_t> qref;
};

// Exact path: maximum cosine similarity over candidate offsets. The window
// covers positions [pos - N/2 + 1, pos + N/2]; a candidate is valid only if
// both windows stay inside the lane. Ties keep the lowest offset.
//
// Horizontal lanes have stride 1, so windows are used in place; strided lanes
// gather the reference span once per block, not once per candidate.
SimResult lane_similarity(const LaneView& lane, const MeParams& params, SimWorkspace& ws) {
    const int n = params.window;
    const int lo = lane.pos - n / 2 + 1;
    const int hi = lane.pos + n / 2;
    if (lo < 0 || hi >= lane.limit) return {};

    const int span_lo = std::max(lo - params.search_range, 0);
    const double* cur_window;
    const double* ref_span;  // reference values from position span_lo on
    if (lane.stride == 1) {
        cur_window = lane.cur + lo;
        ref_span = lane.ref + span_lo;
    } else {
        const int span_hi = std::min(hi + params.search_range, lane.limit - 1);
        ws.cur.resize(std::size_t(n));
        ws.ref.resize(std::size_t(span_hi - span_lo + 1));
        for (int i = 0; i < n; ++i) ws.cur[std::size_t(i)] = lane.cur[(lo + i) * lane.stride];
        for (int i = 0; i <= span_hi - span_lo; ++i)
            ws.ref[std::size_t(i)] = lane.ref[(span_lo + i) * lane.stride];
        cur_window = ws.cur.data();
        ref_span = ws.ref.data();
    }

    const auto& kt = kernels::active();
    SimResult best;
    double best_s = -1.0;
    for (int j = -params.search_range; j <= params.search_range; ++j) {
        if (lo + j < 0 || hi + j >= lane.limit) continue;
        const auto parts =
            kt.cosine_parts(cur_window, ref_span + (lo + j - span_lo), std::size_t(n));
        double s;
        if (parts.norm_a == 0.0 && parts.norm_b == 0.0)
            s = 1.0;
        else if (parts.norm_a == 0.0 || parts.norm_b == 0.0)
            s = 0.0;
        else
            s = std::clamp(parts.dot / (std::sqrt(parts.norm_a) * std::sqrt(parts.norm_b)), 0.0,
                           1.0);
        if (s > best_s) {
            best_s = s;
            best = {s, j};
        }
    }
    return best_s < 0.0 ? SimResult{} : best;
}

// Quantized fast path: energies scaled to 16 bits, candidates ranked by
// squared similarity so only the winning offset needs a square root.
SimResult lane_similarity_quantized(const uint32_t* qcur_lane, const uint32_t* qref_lane,
                                    const LaneView& lane, const MeParams& params) {
    const int n = params.window;
    const int lo = lane.pos - n / 2 + 1;
    const int hi = lane.pos + n / 2;
    if (lo < 0 || hi >= lane.limit) return {};

    SimResult best;
    double best_sq = -1.0;
    for (int j = -params.search_range; j <= params.search_range; ++j) {
        if (lo + j < 0 || hi + j >= lane.limit) continue;
        uint64_t dot = 0, naa = 0, nbb = 0;
        for (int i = 0; i < n; ++i) {
            const uint64_t a = qcur_lane[(lo + i) * lane.stride];
            const uint64_t b = qref_lane[(lo + i + j) * lane.stride];
            dot += a * b;
            naa += a * a;
            nbb += b * b;
        }
        double sq;
        if (naa == 0 && nbb == 0)
            sq = 1.0;
        else if (naa == 0 || nbb == 0)
            sq = 0.0;
        else
            sq = std::clamp((double(dot) * double(dot)) / (double(naa) * double(nbb)), 0.0, 1.0);
        if (sq > best_sq) {
            best_sq = sq;
            best = {sq, j};
        }
    }
    if (best_sq < 0.0) return {};
    best.s = std::sqrt(best.s);
    return best;
}

void quantize_energies(const std::vector<double>& values, double scale,
                       std::vector<uint32_t>& out) {
    out.resize(values.size());
    for (std::size_t i = 0; i < values.size(); ++i)
        out[i] = uint32_t(std::lround(values[i] * scale));
}

}  // namespace

double horiz_similarity(const EnergyMap& current, const EnergyMap& reference, int block_index,
                        const MeParams& params) {
    params.validate();
    require_same_grid(current, reference);
    require_block_index(current, block_index);
    SimWorkspace ws;
    return lane_similarity(row_lane(current, reference, block_index), params, ws).s;
}

double vert_similarity(const EnergyMap& current, const EnergyMap& reference, int block_index,
                       const MeParams& params) {
    params.validate();
    require_same_grid(current, reference);
    require_block_index(current, block_index);
    SimWorkspace ws;
    return lane_similarity(column_lane(current, reference, block_index), params, ws).s;
}

double attenuation(double s_hor, double s_ver) {
    if (!(s_hor >= 0.0 && s_hor <= 1.0) || !(s_ver >= 0.0 && s_ver <= 1.0))
        throw ConfigError("similarities must lie in [0,1], got s_hor=" + std::to_string(s_hor) +
                          " s_ver=" + std::to_string(s_ver));
    const double sum = s_hor + s_ver;
    return sum <= 1.0 ? 1.0 - sum : 1.0 - std::max(s_hor, s_ver);
}

AttenuatedTemporal attenuated_temporal_feature(const EnergyMap& current,
                                               const EnergyMap& reference,
                                               const MeParams& params, int threads) {
    params.validate();
    require_same_grid(current, reference);

    const int blocks = current.grid.block_count;
    AttenuatedTemporal result;
    auto& map = result.map;
    map.frame_index = current.frame_index;
    map.reference_index = reference.frame_index;
    map.grid = current.grid;
    map.mu.resize(blocks);
    map.s_hor.resize(blocks);
    map.s_ver.resize(blocks);
    map.offset_hor.resize(blocks);
    map.offset_ver.resize(blocks);

    std::vector<uint32_t> qcur, qref;
    if (params.quantize) {
        double max_h = 0.0;
        for (double v : current.values) max_h = std::max(max_h, v);
        for (double v : reference.values) max_h = std::max(max_h, v);
        const double scale = max_h > 0.0 ? 65535.0 / max_h : 0.0;
        quantize_energies(current.values, scale, qcur);
        quantize_energies(reference.values, scale, qref);
    }

    parallel_for(blocks, threads, [&](int64_t begin, int64_t end) {
        SimWorkspace ws;
        for (int64_t block = begin; block < end; ++block) {
            const int k = int(block);
            SimResult sh, sv;
            if (params.quantize) {
                const LaneView row = row_lane(current, reference, k);
                const LaneView col = column_lane(current, reference, k);
                const auto row_off = std::size_t(row.cur - current.values.data());
                const auto col_off = std::size_t(col.cur - current.values.data());
                sh = lane_similarity_quantized(qcur.data() + row_off, qref.data() + row_off, row,
                                               params);
                sv = lane_similarity_quantized(qcur.data() + col_off, qref.data() + col_off, col,
                                               params);
            } else {
                sh = lane_similarity(row_lane(current, reference, k), params, ws);
                sv = lane_similarity(column_lane(current, reference, k), params, ws);
            }
            map.s_hor[std::size_t(k)] = sh.s;
            map.s_ver[std::size_t(k)] = sv.s;
            map.offset_hor[std::size_t(k)] = int16_t(sh.offset);
            map.offset_ver[std::size_t(k)] = int16_t(sv.offset);
            map.mu[std::size_t(k)] = attenuation(sh.s, sv.s);
        }
    });

    double sum = 0.0;
    for (int k = 0; k < blocks; ++k)
        sum += map.mu[std::size_t(k)] *
               std::fabs(current.values[std::size_t(k)] - reference.values[std::size_t(k)]);
    result.h = sum / feature_normalizer(current.grid);
    return result;
}

}  // namespace vcx
