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

#include "vcx/eval.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <tuple>

#include "vcx/parallel.hpp"

namespace vcx {

std::vector<BitrateRecord> read_bitrate_csv(const std::filesystem::path& path) {
    std::ifstream file(path);
    if (!file) throw IoError("cannot open " + path.string());

    auto strip = [](std::string s) {
        while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t'))
            s.pop_back();
        std::size_t i = 0;
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        return s.substr(i);
    };

    std::string line;
    if (!std::getline(file, line))
        throw FormatError(path.string() + ": empty bitrate CSV");
    {
        std::string header = strip(line);
        if (!header.starts_with("clip,bitrate"))
            throw FormatError(path.string() + ": expected header 'clip,bitrate', got '" + header +
                              "'");
    }

    std::vector<BitrateRecord> records;
    std::size_t line_no = 1;
    while (std::getline(file, line)) {
        ++line_no;
        const std::string row = strip(line);
        if (row.empty()) continue;
        const auto comma = row.find(',');
        if (comma == std::string::npos)
            throw FormatError(path.string() + ":" + std::to_string(line_no) +
                              ": expected 'clip,bitrate' row");
        BitrateRecord rec;
        rec.clip = strip(row.substr(0, comma));
        std::string rest = row.substr(comma + 1);
        const auto extra = rest.find(',');
        if (extra != std::string::npos) {
            rec.note = strip(rest.substr(extra + 1));
            rest = rest.substr(0, extra);
        }
        try {
            rec.bitrate = std::stod(strip(rest));
        } catch (const std::exception&) {
            throw FormatError(path.string() + ":" + std::to_string(line_no) + ": bad bitrate '" +
                              rest + "'");
        }
        if (!(rec.bitrate > 0))
            throw FormatError(path.string() + ":" + std::to_string(line_no) +
                              ": bitrate must be positive");
        records.push_back(std::move(rec));
    }
    return records;
}

namespace {

struct SeriesStats {
    double mean_x = 0, mean_y = 0, cov = 0, var_x = 0, var_y = 0;
};

SeriesStats series_stats(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size())
        throw ConfigError("series lengths differ: " + std::to_string(xs.size()) + " vs " +
                          std::to_string(ys.size()));
    if (xs.size() < 2)
        throw ConfigError("correlation requires at least 2 samples, got " +
                          std::to_string(xs.size()));
    const double n = double(xs.size());
    SeriesStats st;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        st.mean_x += xs[i];
        st.mean_y += ys[i];
    }
    st.mean_x /= n;
    st.mean_y /= n;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double dx = xs[i] - st.mean_x;
        const double dy = ys[i] - st.mean_y;
        st.cov += dx * dy;
        st.var_x += dx * dx;
        st.var_y += dy * dy;
    }
    return st;
}

}  // namespace

double pearson(std::span<const double> xs, std::span<const double> ys) {
    const auto st = series_stats(xs, ys);
    if (st.var_x == 0.0 || st.var_y == 0.0)
        throw ConfigError("correlation of a constant series is undefined");
    return st.cov / std::sqrt(st.var_x * st.var_y);
}

std::pair<double, double> linear_fit(std::span<const double> xs, std::span<const double> ys) {
    const auto st = series_stats(xs, ys);
    if (st.var_x == 0.0 || st.var_y == 0.0)
        throw ConfigError("least-squares fit of a constant series is undefined");
    const double slope = st.cov / st.var_x;
    return {slope, st.mean_y - slope * st.mean_x};
}

CorrelationResult correlate(std::span<const double> xs, std::span<const double> ys) {
    CorrelationResult result;
    result.pcc = pearson(xs, ys);
    std::tie(result.slope, result.intercept) = linear_fit(xs, ys);
    result.n = int64_t(xs.size());
    return result;
}

WeightGrid WeightGrid::default_grid() {
    const std::vector<double> axis{0,    0.0001, 0.0005, 0.001, 0.005,
                                   0.01, 0.04,   0.11,   0.5,   1.0};
    return WeightGrid{axis, axis, axis, axis};
}

std::size_t WeightGrid::tuple_count() const {
    return w_intra.size() * w_l0.size() * w_l1.size() * w_l2.size();
}

void WeightGrid::validate() const {
    if (w_intra.empty() || w_l0.empty() || w_l1.empty() || w_l2.empty())
        throw ConfigError("every weight grid axis needs at least one candidate value");
    auto check = [](const std::vector<double>& axis, const char* name) {
        for (double v : axis)
            if (v < 0)
                throw ConfigError(std::string("negative candidate on grid axis ") + name);
    };
    check(w_intra, "w_intra");
    check(w_l0, "w_l0");
    check(w_l1, "w_l1");
    check(w_l2, "w_l2");
}

namespace {

struct Candidate {
    double pcc = -2.0;  // below any correlation
    LayerWeights weights;
    bool valid = false;
};

std::array<double, 4> as_tuple(const LayerWeights& w) {
    return {w.w_intra, w.w_l0, w.w_l1, w.w_l2};
}

// Higher correlation wins; exact ties keep the lexicographically smallest
// (w_intra, w_l0, w_l1, w_l2) tuple.
bool better(const Candidate& a, const Candidate& b) {
    if (!b.valid) return a.valid;
    if (!a.valid) return false;
    if (a.pcc != b.pcc) return a.pcc > b.pcc;
    return as_tuple(a.weights) < as_tuple(b.weights);
}

}  // namespace

CalibrationResult calibrate_weights(std::span<const ClipComponents> clips,
                                    std::span<const double> bitrates, const WeightGrid& grid,
                                    int threads) {
    grid.validate();
    if (clips.size() != bitrates.size())
        throw ConfigError("clip count " + std::to_string(clips.size()) +
                          " does not match bitrate count " + std::to_string(bitrates.size()));
    if (clips.size() < 2)
        throw ConfigError("calibration requires at least 2 clips, got " +
                          std::to_string(clips.size()));

    const auto start = std::chrono::steady_clock::now();

    const int64_t n0 = int64_t(grid.w_intra.size());
    const int64_t n1 = int64_t(grid.w_l0.size());
    const int64_t n2 = int64_t(grid.w_l1.size());
    const int64_t n3 = int64_t(grid.w_l2.size());
    const int64_t tuples = n0 * n1 * n2 * n3;

    const int workers = int(std::min<int64_t>(std::max(threads, 1), tuples));
    std::vector<Candidate> best_per_worker(static_cast<std::size_t>(workers));
    std::vector<int64_t> skipped_per_worker(static_cast<std::size_t>(workers), 0);
    const int64_t chunk = (tuples + workers - 1) / workers;

    parallel_for(int64_t(workers), workers, [&](int64_t wbegin, int64_t wend) {
        for (int64_t wi = wbegin; wi < wend; ++wi) {
            const int64_t begin = wi * chunk;
            const int64_t end = std::min(begin + chunk, tuples);
            Candidate best;
            int64_t skipped = 0;
            std::vector<double> complexity(clips.size());
            for (int64_t t = begin; t < end; ++t) {
                LayerWeights w;
                w.w_intra = grid.w_intra[std::size_t(t / (n1 * n2 * n3))];
                w.w_l0 = grid.w_l0[std::size_t((t / (n2 * n3)) % n1)];
                w.w_l1 = grid.w_l1[std::size_t((t / n3) % n2)];
                w.w_l2 = grid.w_l2[std::size_t(t % n3)];

                for (std::size_t c = 0; c < clips.size(); ++c) {
                    const auto& s = clips[c].sums;
                    complexity[c] = w.w_intra * s.e_intra + w.w_l0 * s.h_l0 + w.w_l1 * s.h_l1 +
                                    w.w_l2 * s.h_l2;
                }
                const auto minmax = std::minmax_element(complexity.begin(), complexity.end());
                if (*minmax.first == *minmax.second) {
                    ++skipped;  // constant complexity, correlation undefined
                    continue;
                }
                Candidate cand{pearson(complexity, bitrates), w, true};
                if (better(cand, best)) best = cand;
            }
            best_per_worker[std::size_t(wi)] = best;
            skipped_per_worker[std::size_t(wi)] = skipped;
        }
    });

    Candidate best;
    int64_t skipped = 0;
    for (int wi = 0; wi < workers; ++wi) {
        if (better(best_per_worker[std::size_t(wi)], best)) best = best_per_worker[std::size_t(wi)];
        skipped += skipped_per_worker[std::size_t(wi)];
    }
    if (!best.valid)
        throw ConfigError("every weight tuple on the grid gives a constant complexity series");

    // Correlation is invariant to a positive rescaling of all four weights;
    // cross-check on the winner.
    {
        std::vector<double> doubled(clips.size());
        for (std::size_t c = 0; c < clips.size(); ++c) {
            const auto& s = clips[c].sums;
            doubled[c] = 2.0 * (best.weights.w_intra * s.e_intra + best.weights.w_l0 * s.h_l0 +
                                best.weights.w_l1 * s.h_l1 + best.weights.w_l2 * s.h_l2);
        }
        if (std::fabs(pearson(doubled, bitrates) - best.pcc) > 1e-9)
            throw Error("weight-scale invariance violated; numeric inputs are degenerate");
    }

    CalibrationResult result;
    result.weights = best.weights;
    result.pcc = best.pcc;
    result.tuples_evaluated = std::size_t(tuples);
    result.tuples_skipped = std::size_t(skipped);
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

}  // namespace vcx
