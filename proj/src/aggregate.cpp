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

#include "vcx/aggregate.hpp"

namespace vcx {

const char* temporal_variant_name(TemporalVariant v) {
    switch (v) {
        case TemporalVariant::Baseline: return "baseline";
        case TemporalVariant::Motion: return "me";
        case TemporalVariant::MotionRef: return "me+ref";
    }
    return "?";
}

namespace {

double require_temporal(const FrameFeatures& f) {
    if (!f.temporal)
        throw ConfigError("Inter frame " + std::to_string(f.poc) + " has no temporal feature");
    return *f.temporal;
}

}  // namespace

double complexity_baseline(std::span<const FrameFeatures> features) {
    if (features.empty()) throw ConfigError("cannot aggregate an empty feature list");
    double c = 0.0;
    for (const auto& f : features)
        c += f.cls.is_intra() ? f.spatial : require_temporal(f);
    return c;
}

double complexity_layered(std::span<const FrameFeatures> features, const LayerWeights& weights) {
    if (features.empty()) throw ConfigError("cannot aggregate an empty feature list");
    weights.validate();
    double c = 0.0;
    for (const auto& f : features) {
        if (f.cls.is_intra()) {
            c += weights.w_intra * f.spatial;
            continue;
        }
        if (f.cls.layer < 0)
            throw ConfigError("Inter frame " + std::to_string(f.poc) + " is missing its layer");
        const double h = require_temporal(f);
        switch (f.cls.layer) {
            case 0: c += weights.w_l0 * h; break;
            case 1: c += weights.w_l1 * h; break;
            default: c += weights.w_l2 * h; break;
        }
    }
    return c;
}

ComponentSums component_sums(std::span<const FrameFeatures> features) {
    ComponentSums sums;
    for (const auto& f : features) {
        if (f.cls.is_intra()) {
            sums.e_intra += f.spatial;
            continue;
        }
        const double h = require_temporal(f);
        switch (f.cls.layer) {
            case 0: sums.h_l0 += h; break;
            case 1: sums.h_l1 += h; break;
            default: sums.h_l2 += h; break;
        }
    }
    return sums;
}

}  // namespace vcx
