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
#include <span>
#include <string>
#include <vector>

#include "vcx/gop.hpp"
#include "vcx/motion.hpp"

namespace vcx {

/// Which pipeline produced a frame's temporal feature.
enum class TemporalVariant : uint8_t { Baseline, Motion, MotionRef };

const char* temporal_variant_name(TemporalVariant v);

/// Per-frame feature record. Intra frames carry no temporal feature (the
/// aggregation counts them separately); mu_mean is present only when motion
/// estimation ran for the frame.
struct FrameFeatures {
    int64_t poc = 0;
    FrameClass cls;
    double spatial = 0.0;                 // E, always computed
    std::optional<double> temporal;       // h, absent for Intra
    TemporalVariant variant = TemporalVariant::Baseline;
    std::optional<double> mu_mean;
};

/// Sum of temporal features over Inter frames plus spatial features over Intra
/// frames.
double complexity_baseline(std::span<const FrameFeatures> features);

/// Layer-weighted sequence complexity: per-layer temporal sums scaled by the
/// layer weights plus the Intra spatial sum scaled by w_intra. Layers deeper
/// than 2 reuse w_l2. Throws ConfigError if an Inter frame is missing a layer.
double complexity_layered(std::span<const FrameFeatures> features, const LayerWeights& weights);

/// Per-class component sums, the calibration inputs.
struct ComponentSums {
    double e_intra = 0.0;
    double h_l0 = 0.0;
    double h_l1 = 0.0;
    double h_l2 = 0.0;  // layer >= 2
};

ComponentSums component_sums(std::span<const FrameFeatures> features);

struct TimingStats {
    int64_t frames = 0;
    double seconds = 0.0;
    double fps = 0.0;
};

/// Full analysis output for one clip.
struct ComplexityReport {
    std::string clip_id;
    std::string mode;
    int block_size = 0;
    MeParams me;
    GopStructure gop;
    std::vector<FrameFeatures> frames;  // sorted by poc, contiguous from 0
    ComponentSums components;
    double c_baseline = 0.0;
    double c_layered = 0.0;
    double c = 0.0;  // the mode's headline complexity
    TimingStats timing;
};

}  // namespace vcx
