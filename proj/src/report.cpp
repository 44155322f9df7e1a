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

#include "vcx/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace vcx {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

ordered_json weights_to_json(const LayerWeights& w) {
    return ordered_json{
        {"intra", w.w_intra}, {"l0", w.w_l0}, {"l1", w.w_l1}, {"l2", w.w_l2}};
}

void write_text_file(const std::string& text, const std::filesystem::path& path) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw IoError("cannot open " + path.string() + " for writing");
    file << text;
    if (!file) throw IoError("write failed: " + path.string());
}

}  // namespace

std::string report_to_json(const ComplexityReport& report) {
    ordered_json doc;
    doc["id"] = report.clip_id;
    doc["mode"] = report.mode;
    doc["config"] = ordered_json{
        {"block_size", report.block_size},
        {"me",
         ordered_json{{"window", report.me.window},
                      {"range", report.me.search_range},
                      {"quantize", report.me.quantize}}},
        {"gop",
         ordered_json{{"size", report.gop.gop_size},
                      {"intra_period", report.gop.intra_period},
                      {"weights", weights_to_json(report.gop.weights)}}},
    };

    ordered_json frames = ordered_json::array();
    for (const auto& f : report.frames) {
        ordered_json row;
        row["poc"] = f.poc;
        row["kind"] = f.cls.is_intra() ? "I" : "P";
        if (f.cls.is_intra()) {
            row["layer"] = nullptr;
            row["ref"] = nullptr;
        } else {
            row["layer"] = f.cls.layer;
            if (f.cls.reference)
                row["ref"] = *f.cls.reference;
            else
                row["ref"] = nullptr;
        }
        row["E"] = f.spatial;
        if (f.temporal)
            row["h"] = *f.temporal;
        else
            row["h"] = nullptr;
        row["h_variant"] = f.cls.is_intra() ? ordered_json(nullptr)
                                            : ordered_json(temporal_variant_name(f.variant));
        if (f.mu_mean)
            row["mu_mean"] = *f.mu_mean;
        else
            row["mu_mean"] = nullptr;
        frames.push_back(std::move(row));
    }
    doc["frames"] = std::move(frames);

    doc["components"] = ordered_json{{"e_intra", report.components.e_intra},
                                     {"h_l0", report.components.h_l0},
                                     {"h_l1", report.components.h_l1},
                                     {"h_l2", report.components.h_l2}};
    doc["complexity"] = ordered_json{{"baseline", report.c_baseline},
                                     {"layered", report.c_layered},
                                     {"C", report.c}};
    doc["timing"] = ordered_json{{"frames", report.timing.frames},
                                 {"seconds", report.timing.seconds},
                                 {"fps", report.timing.fps}};
    return doc.dump(2) + "\n";
}

void write_json_report(const ComplexityReport& report, const std::filesystem::path& path) {
    write_text_file(report_to_json(report), path);
}

void write_csv_report(const ComplexityReport& report, std::ostream& out) {
    out << "poc,kind,layer,E,h,mu_mean\n";
    for (const auto& f : report.frames) {
        out << f.poc << ',' << (f.cls.is_intra() ? 'I' : 'P') << ',';
        if (!f.cls.is_intra()) out << f.cls.layer;
        out << ',' << format_double(f.spatial) << ',';
        if (f.temporal) out << format_double(*f.temporal);
        out << ',';
        if (f.mu_mean) out << format_double(*f.mu_mean);
        out << '\n';
    }
    out << "summary,C_baseline," << format_double(report.c_baseline) << ",C_layered,"
        << format_double(report.c_layered) << ",fps," << format_double(report.timing.fps)
        << '\n';
}

void write_csv_report(const ComplexityReport& report, const std::filesystem::path& path) {
    std::ostringstream os;
    write_csv_report(report, os);
    write_text_file(os.str(), path);
}

ReportSummary read_report_summary(const std::filesystem::path& path) {
    std::ifstream file(path);
    if (!file) throw IoError("cannot open " + path.string());
    ordered_json doc;
    try {
        file >> doc;
    } catch (const std::exception& e) {
        throw FormatError(path.string() + ": not a valid report: " + e.what());
    }
    try {
        ReportSummary summary;
        summary.id = doc.at("id").get<std::string>();
        summary.mode = doc.at("mode").get<std::string>();
        summary.c = doc.at("complexity").at("C").get<double>();
        const auto& comp = doc.at("components");
        summary.components.e_intra = comp.at("e_intra").get<double>();
        summary.components.h_l0 = comp.at("h_l0").get<double>();
        summary.components.h_l1 = comp.at("h_l1").get<double>();
        summary.components.h_l2 = comp.at("h_l2").get<double>();
        return summary;
    } catch (const std::exception& e) {
        throw FormatError(path.string() + ": missing report field: " + e.what());
    }
}

std::string evaluation_to_json(const CorrelationResult& result,
                               std::span<const EvaluationEntry> entries) {
    ordered_json doc;
    doc["pcc"] = result.pcc;
    doc["slope"] = result.slope;
    doc["intercept"] = result.intercept;
    doc["n"] = result.n;
    ordered_json per_clip = ordered_json::array();
    for (const auto& e : entries)
        per_clip.push_back(ordered_json{
            {"clip", e.clip}, {"complexity", e.complexity}, {"bitrate", e.bitrate}});
    doc["per_clip"] = std::move(per_clip);
    return doc.dump(2) + "\n";
}

std::string calibration_to_json(const CalibrationResult& result, const WeightGrid& grid,
                                int64_t clip_count) {
    ordered_json doc;
    doc["weights"] = weights_to_json(result.weights);
    doc["pcc"] = result.pcc;
    doc["grid"] = ordered_json{{"axis_sizes",
                                ordered_json{{"intra", grid.w_intra.size()},
                                             {"l0", grid.w_l0.size()},
                                             {"l1", grid.w_l1.size()},
                                             {"l2", grid.w_l2.size()}}},
                               {"tuples", result.tuples_evaluated},
                               {"degenerate_tuples", result.tuples_skipped}};
    doc["clips"] = clip_count;
    doc["runtime_seconds"] = result.seconds;
    return doc.dump(2) + "\n";
}

}  // namespace vcx
