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
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "vcx/aggregate.hpp"
#include "vcx/eval.hpp"

namespace vcx {

/// Serializes the full report: config echo, per-frame rows, component sums,
/// complexity values and timing. Field order is fixed, so identical analyses
/// produce byte-identical documents apart from the timing object.
std::string report_to_json(const ComplexityReport& report);
void write_json_report(const ComplexityReport& report, const std::filesystem::path& path);

/// CSV layout: header "poc,kind,layer,E,h,mu_mean", one row per frame, then a
/// footer row "summary,C_baseline,<v>,C_layered,<v>,fps,<v>".
void write_csv_report(const ComplexityReport& report, std::ostream& out);
void write_csv_report(const ComplexityReport& report, const std::filesystem::path& path);

/// The subset of a JSON report the evaluation commands need.
struct ReportSummary {
    std::string id;
    std::string mode;
    double c = 0.0;
    ComponentSums components;
};

ReportSummary read_report_summary(const std::filesystem::path& path);

struct EvaluationEntry {
    std::string clip;
    double complexity = 0.0;
    double bitrate = 0.0;
};

std::string evaluation_to_json(const CorrelationResult& result,
                               std::span<const EvaluationEntry> entries);

std::string calibration_to_json(const CalibrationResult& result,
                                const WeightGrid& grid, int64_t clip_count);

}  // namespace vcx
