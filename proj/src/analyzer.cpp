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

#include "vcx/analyzer.hpp"

#include <chrono>
#include <numeric>

#include "vcx/temporal.hpp"

namespace vcx {

const char* analysis_mode_name(AnalysisMode m) {
    switch (m) {
        case AnalysisMode::Vca: return "vca";
        case AnalysisMode::VcaMe: return "vca+me";
        case AnalysisMode::VcaWeights: return "vca+weights";
        case AnalysisMode::Ivca: return "ivca";
    }
    return "?";
}

AnalysisMode parse_analysis_mode(const std::string& s) {
    if (s == "vca") return AnalysisMode::Vca;
    if (s == "vca+me") return AnalysisMode::VcaMe;
    if (s == "vca+weights") return AnalysisMode::VcaWeights;
    if (s == "ivca") return AnalysisMode::Ivca;
    throw ConfigError("unknown mode '" + s + "' (expected vca, vca+me, vca+weights or ivca)");
}

bool mode_uses_motion(AnalysisMode m) {
    return m == AnalysisMode::VcaMe || m == AnalysisMode::Ivca;
}

bool mode_uses_weights(AnalysisMode m) {
    return m == AnalysisMode::VcaWeights || m == AnalysisMode::Ivca;
}

bool mode_uses_reference_structure(AnalysisMode m) {
    return m == AnalysisMode::Ivca;
}

void AnalysisConfig::validate() const {
    if (block_size < 4 || (block_size & (block_size - 1)) != 0)
        throw ConfigError("block size must be a power of two >= 4, got " +
                          std::to_string(block_size));
    me.validate();
    gop.validate();
    if (threads < 1)
        throw ConfigError("thread count must be >= 1, got " + std::to_string(threads));
    if (heatmap_every < 0)
        throw ConfigError("heatmap stride must be >= 0, got " + std::to_string(heatmap_every));
}

AnalysisResult analyze_clip(FrameReader& reader, const AnalysisConfig& config) {
    config.validate();

    const auto start = std::chrono::steady_clock::now();
    const DctPlan plan(config.block_size);

    // Pass 1: stream planes, keep only per-block energies.
    std::vector<EnergyMap> maps;
    std::vector<double> spatial;
    while (auto plane = reader.next()) {
        maps.push_back(compute_energy_map(*plane, plan, config.threads));
        spatial.push_back(spatial_feature(maps.back()));
    }
    if (maps.empty()) throw FormatError("input stream contains no frames");
    const int64_t frame_count = int64_t(maps.size());

    // Pass 2: temporal features against the mode's reference.
    AnalysisResult result;
    auto& report = result.report;
    report.frames.reserve(maps.size());

    const TemporalVariant variant = !mode_uses_motion(config.mode) ? TemporalVariant::Baseline
                                    : mode_uses_reference_structure(config.mode)
                                        ? TemporalVariant::MotionRef
                                        : TemporalVariant::Motion;

    for (int64_t poc = 0; poc < frame_count; ++poc) {
        FrameFeatures f;
        f.poc = poc;
        f.cls = classify(poc, config.gop);
        f.spatial = spatial[std::size_t(poc)];
        f.variant = variant;

        if (!f.cls.is_intra() && poc > 0) {
            const int64_t ref = mode_uses_reference_structure(config.mode)
                                    ? select_reference(poc, config.gop, frame_count)
                                    : poc - 1;
            f.cls.reference = ref;
            const auto& cur_map = maps[std::size_t(poc)];
            const auto& ref_map = maps[std::size_t(ref)];

            const bool keep_maps =
                config.heatmap_every > 0 && poc % config.heatmap_every == 0;

            if (mode_uses_motion(config.mode)) {
                auto att =
                    attenuated_temporal_feature(cur_map, ref_map, config.me, config.threads);
                f.temporal = att.h;
                f.mu_mean = std::accumulate(att.map.mu.begin(), att.map.mu.end(), 0.0) /
                            double(att.map.mu.size());
                if (keep_maps)
                    result.heatmap_frames.push_back(
                        {poc, sad_map(cur_map, ref_map), std::move(att.map)});
            } else {
                f.temporal = temporal_feature(cur_map, ref_map);
                if (keep_maps)
                    result.heatmap_frames.push_back({poc, sad_map(cur_map, ref_map), {}});
            }
        } else if (!f.cls.is_intra() && poc == 0) {
            // A structure with intra_period 0 classifies only frame 0 as Intra,
            // so this cannot happen; classify() always makes poc 0 Intra.
            throw Error("frame 0 classified Inter");
        }
        report.frames.push_back(std::move(f));
    }

    report.clip_id = config.clip_id;
    report.mode = analysis_mode_name(config.mode);
    report.block_size = config.block_size;
    report.me = config.me;
    report.gop = config.gop;
    report.components = component_sums(report.frames);
    report.c_baseline = complexity_baseline(report.frames);
    report.c_layered = complexity_layered(report.frames, config.gop.weights);
    report.c = mode_uses_weights(config.mode) ? report.c_layered : report.c_baseline;

    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report.timing.frames = frame_count;
    report.timing.seconds = seconds;
    report.timing.fps = seconds > 0.0 ? double(frame_count) / seconds : 0.0;
    return result;
}

}  // namespace vcx
