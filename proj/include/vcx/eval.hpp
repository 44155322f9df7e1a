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
#include <filesystem>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "vcx/aggregate.hpp"

namespace vcx {

/// One clip's encoder bitrate. The unit only has to be uniform across a
/// dataset; correlation is invariant to positive scaling.
struct BitrateRecord {
    std::string clip;
    double bitrate = 0.0;
    std::string note;
};

/// Parses a CSV with header "clip,bitrate". Extra columns are kept as a note.
std::vector<BitrateRecord> read_bitrate_csv(const std::filesystem::path& path);

struct CorrelationResult {
    double pcc = 0.0;
    double slope = 0.0;
    double intercept = 0.0;
    int64_t n = 0;
};

/// Sample Pearson correlation. Requires equal lengths >= 2 and non-constant
/// series (ConfigError otherwise).
double pearson(std::span<const double> xs, std::span<const double> ys);

/// Least-squares line (slope, intercept). Same preconditions as pearson.
std::pair<double, double> linear_fit(std::span<const double> xs, std::span<const double> ys);

CorrelationResult correlate(std::span<const double> xs, std::span<const double> ys);

/// Calibration input: one clip's per-class feature sums.
struct ClipComponents {
    std::string id;
    ComponentSums sums;
};

/// Candidate values per weight axis.
struct WeightGrid {
    std::vector<double> w_intra;
    std::vector<double> w_l0;
    std::vector<double> w_l1;
    std::vector<double> w_l2;

    static WeightGrid default_grid();
    std::size_t tuple_count() const;
    void validate() const;
};

struct CalibrationResult {
    LayerWeights weights;
    double pcc = 0.0;
    std::size_t tuples_evaluated = 0;
    std::size_t tuples_skipped = 0;  // degenerate (constant complexity) tuples
    double seconds = 0.0;
};

/// Exhaustive grid search for the weight tuple maximizing the correlation of
/// layered complexity against bitrate. Ties break toward the lexicographically
/// smallest tuple (w_intra, w_l0, w_l1, w_l2); the reduction is deterministic
/// for any thread count. Tuples giving a constant complexity series are
/// skipped; if all are, throws ConfigError.
CalibrationResult calibrate_weights(std::span<const ClipComponents> clips,
                                    std::span<const double> bitrates,
                                    const WeightGrid& grid,
                                    int threads = 1);

}  // namespace vcx
