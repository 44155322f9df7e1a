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

#include <filesystem>
#include <string>
#include <vector>

#include "vcx/aggregate.hpp"
#include "vcx/temporal.hpp"
#include "vcx/video_io.hpp"

namespace vcx {

/// Feature pipeline variants. They toggle motion estimation, layer weighting
/// and reference selection on top of the baseline analyzer:
///   vca          h vs previous frame, unweighted complexity
///   vca+me       motion-attenuated h vs previous frame, unweighted complexity
///   vca+weights  h vs previous frame, layer-weighted complexity
///   ivca         motion-attenuated h vs structural reference, layer-weighted
enum class AnalysisMode : uint8_t { Vca, VcaMe, VcaWeights, Ivca };

const char* analysis_mode_name(AnalysisMode m);
AnalysisMode parse_analysis_mode(const std::string& s);

bool mode_uses_motion(AnalysisMode m);
bool mode_uses_weights(AnalysisMode m);
bool mode_uses_reference_structure(AnalysisMode m);

struct AnalysisConfig {
    std::string clip_id;
    int block_size = 32;  // power of two >= 4
    AnalysisMode mode = AnalysisMode::Ivca;
    MeParams me;
    GopStructure gop;
    int threads = 1;

    /// When > 0, keep the SAD and attenuation maps of every K-th Inter frame
    /// for heatmap emission.
    int heatmap_every = 0;

    void validate() const;
};

/// Diagnostic maps retained for one frame.
struct FrameMaps {
    int64_t poc = 0;
    SadMap sad;
    AttenuationMap attenuation;  // empty (mu.size() == 0) when ME was off
};

struct AnalysisResult {
    ComplexityReport report;
    std::vector<FrameMaps> heatmap_frames;
};

/// Runs the configured feature pipeline over a frame stream. Timing covers the
/// feature-extraction phase only (decode + features + aggregation); report
/// serialization and heatmap emission happen outside it. Per-block energies of
/// all frames are held in memory to serve future references (~8 bytes per
/// block per frame).
AnalysisResult analyze_clip(FrameReader& reader, const AnalysisConfig& config);

}  // namespace vcx
