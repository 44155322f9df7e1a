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

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vcx/analyzer.hpp"
#include "vcx/eval.hpp"
#include "vcx/heatmap.hpp"
#include "vcx/kernels.hpp"
#include "vcx/report.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

std::vector<double> parse_double_list(const std::string& text, const std::string& what) {
    std::vector<double> values;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto comma = text.find(',', pos);
        const std::string item =
            text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (item.empty()) throw vcx::ConfigError(what + ": empty element in '" + text + "'");
        try {
            values.push_back(std::stod(item));
        } catch (const std::exception&) {
            throw vcx::ConfigError(what + ": bad number '" + item + "'");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (values.empty()) throw vcx::ConfigError(what + ": empty list");
    return values;
}

struct AnalyzeOptions {
    std::vector<std::string> inputs;
    std::string format = "auto";  // auto | y4m | raw
    int width = 0;
    int height = 0;
    double fps = 25.0;
    std::string chroma = "420";
    std::string mode = "ivca";
    int block_size = 32;
    int me_window = 8;
    int me_range = 4;
    bool me_quantize = false;
    int gop_size = 4;
    int intra_period = 250;
    std::string weights;  // "wI,wL0,wL1,wL2"
    std::string id;
    std::string json_path;
    std::string csv_path;
    std::string out_dir;
    std::string heatmap_dir;
    int heatmap_every = 0;
    int threads = 1;
};

std::unique_ptr<vcx::FrameReader> open_input(const fs::path& path, const AnalyzeOptions& opt) {
    std::string format = opt.format;
    if (format == "auto") {
        std::string ext = path.extension().string();
        std::transform(ext.begin(), ext.end(), ext.begin(),
                       [](unsigned char c) { return char(std::tolower(c)); });
        format = (ext == ".y4m") ? "y4m" : "raw";
    }
    if (format == "y4m") return vcx::open_y4m(path);

    if (opt.width <= 0 || opt.height <= 0)
        throw vcx::ConfigError("raw input " + path.string() +
                               " requires --width and --height");
    vcx::VideoSpec spec;
    spec.width = opt.width;
    spec.height = opt.height;
    spec.frame_rate = opt.fps;
    spec.chroma = vcx::parse_chroma_format(opt.chroma);
    return vcx::open_raw_yuv(path, spec);
}

// Removes every file this clip produced; called when its analysis fails.
class OutputTracker {
public:
    void add(const fs::path& path) { written_.push_back(path); }
    void discard_all() {
        for (const auto& p : written_) {
            std::error_code ec;
            fs::remove(p, ec);
        }
        written_.clear();
    }
    void commit() { written_.clear(); }

private:
    std::vector<fs::path> written_;
};

int run_analyze(const AnalyzeOptions& opt) {
    if (opt.inputs.empty()) throw vcx::ConfigError("no input files given");
    if (opt.inputs.size() > 1 && (!opt.json_path.empty() || !opt.csv_path.empty() ||
                                  !opt.id.empty()))
        throw vcx::ConfigError("--json/--csv/--id apply to a single input; use --out-dir for "
                               "batches");
    if (opt.heatmap_every > 0 && opt.heatmap_dir.empty())
        throw vcx::ConfigError("--heatmap-every requires --heatmap-dir");

    vcx::AnalysisConfig config;
    config.block_size = opt.block_size;
    config.mode = vcx::parse_analysis_mode(opt.mode);
    config.me.window = opt.me_window;
    config.me.search_range = opt.me_range;
    config.me.quantize = opt.me_quantize;
    config.gop.gop_size = opt.gop_size;
    config.gop.intra_period = opt.intra_period;
    if (!opt.weights.empty()) {
        const auto w = parse_double_list(opt.weights, "--weights");
        if (w.size() != 4)
            throw vcx::ConfigError("--weights expects 4 values wI,wL0,wL1,wL2, got " +
                                   std::to_string(w.size()));
        config.gop.weights = vcx::LayerWeights{w[0], w[1], w[2], w[3]};
    }
    config.threads = opt.threads;
    config.heatmap_every = opt.heatmap_every;
    config.validate();

    if (!opt.out_dir.empty()) fs::create_directories(opt.out_dir);
    if (!opt.heatmap_dir.empty()) fs::create_directories(opt.heatmap_dir);

    for (const auto& input : opt.inputs) {
        const fs::path path(input);
        config.clip_id = !opt.id.empty() ? opt.id : path.stem().string();

        OutputTracker outputs;
        try {
            auto reader = open_input(path, opt);
            auto result = vcx::analyze_clip(*reader, config);
            const auto& report = result.report;

            if (!opt.json_path.empty()) {
                outputs.add(opt.json_path);
                vcx::write_json_report(report, opt.json_path);
            }
            if (!opt.csv_path.empty()) {
                outputs.add(opt.csv_path);
                vcx::write_csv_report(report, opt.csv_path);
            }
            if (!opt.out_dir.empty()) {
                const fs::path base = fs::path(opt.out_dir) / config.clip_id;
                outputs.add(base.string() + ".json");
                vcx::write_json_report(report, base.string() + ".json");
                outputs.add(base.string() + ".csv");
                vcx::write_csv_report(report, base.string() + ".csv");
            }
            for (const auto& fm : result.heatmap_frames) {
                const fs::path base =
                    fs::path(opt.heatmap_dir) /
                    (config.clip_id + "_f" + std::to_string(fm.poc));
                const fs::path sad_path = base.string() + "_sad.pgm";
                outputs.add(sad_path);
                vcx::write_heatmap_pgm(fm.sad.values, fm.sad.grid, sad_path);
                if (!fm.attenuation.mu.empty()) {
                    const fs::path mu_path = base.string() + "_mu.pgm";
                    outputs.add(mu_path);
                    vcx::write_heatmap_pgm(fm.attenuation.mu, fm.attenuation.grid, mu_path);
                }
            }
            outputs.commit();

            std::printf("%s\t%s\t%.17g\t%.2f\n", report.clip_id.c_str(), report.mode.c_str(),
                        report.c, report.timing.fps);
            std::fflush(stdout);
        } catch (...) {
            outputs.discard_all();
            throw;
        }
    }
    return 0;
}

struct JoinedSeries {
    std::vector<vcx::EvaluationEntry> entries;
    std::vector<double> complexity;
    std::vector<double> bitrates;
};

// Joins bitrate rows with analysis reports on clip id; every CSV clip must
// have a report.
JoinedSeries join_reports(const std::vector<std::string>& report_paths,
                          const std::string& bitrate_csv,
                          std::vector<vcx::ReportSummary>* summaries_out = nullptr) {
    std::map<std::string, vcx::ReportSummary> by_id;
    for (const auto& p : report_paths) {
        auto summary = vcx::read_report_summary(p);
        if (by_id.contains(summary.id))
            throw vcx::ConfigError("duplicate report for clip '" + summary.id + "'");
        by_id.emplace(summary.id, std::move(summary));
    }

    const auto records = vcx::read_bitrate_csv(bitrate_csv);
    std::vector<std::string> missing;
    for (const auto& rec : records)
        if (!by_id.contains(rec.clip)) missing.push_back(rec.clip);
    if (!missing.empty()) {
        std::string msg = "bitrate CSV names clips without reports:";
        for (const auto& id : missing) msg += " " + id;
        throw vcx::Error(msg);
    }

    JoinedSeries joined;
    std::map<std::string, double> bitrate_by_id;
    for (const auto& rec : records) {
        if (bitrate_by_id.contains(rec.clip))
            throw vcx::FormatError("duplicate bitrate row for clip '" + rec.clip + "'");
        bitrate_by_id.emplace(rec.clip, rec.bitrate);
    }
    for (const auto& [id, bitrate] : bitrate_by_id) {
        const auto& summary = by_id.at(id);
        joined.entries.push_back({id, summary.c, bitrate});
        joined.complexity.push_back(summary.c);
        joined.bitrates.push_back(bitrate);
        if (summaries_out) summaries_out->push_back(summary);
    }
    return joined;
}

void write_or_print(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw vcx::IoError("cannot open " + out_path + " for writing");
    file << text;
    if (!file) throw vcx::IoError("write failed: " + out_path);
}

int run_evaluate(const std::vector<std::string>& reports, const std::string& bitrate_csv,
                 const std::string& out_path) {
    const auto joined = join_reports(reports, bitrate_csv);
    const auto result = vcx::correlate(joined.complexity, joined.bitrates);
    write_or_print(vcx::evaluation_to_json(result, joined.entries), out_path);
    if (!out_path.empty())
        std::printf("pcc=%.6f n=%lld\n", result.pcc, (long long)result.n);
    return 0;
}

struct CalibrateOptions {
    std::vector<std::string> reports;
    std::string bitrate_csv;
    std::string out_path;
    std::string grid;  // shared axis
    std::string grid_intra, grid_l0, grid_l1, grid_l2;
    bool grid_given = false;
    bool grid_intra_given = false, grid_l0_given = false, grid_l1_given = false,
         grid_l2_given = false;
    int threads = 1;
};

int run_calibrate(const CalibrateOptions& opt) {
    vcx::WeightGrid grid = vcx::WeightGrid::default_grid();
    if (opt.grid_given) {
        const auto axis = parse_double_list(opt.grid, "--grid");
        grid = vcx::WeightGrid{axis, axis, axis, axis};
    }
    if (opt.grid_intra_given) grid.w_intra = parse_double_list(opt.grid_intra, "--grid-intra");
    if (opt.grid_l0_given) grid.w_l0 = parse_double_list(opt.grid_l0, "--grid-l0");
    if (opt.grid_l1_given) grid.w_l1 = parse_double_list(opt.grid_l1, "--grid-l1");
    if (opt.grid_l2_given) grid.w_l2 = parse_double_list(opt.grid_l2, "--grid-l2");
    grid.validate();

    std::vector<vcx::ReportSummary> summaries;
    const auto joined = join_reports(opt.reports, opt.bitrate_csv, &summaries);

    std::vector<vcx::ClipComponents> clips;
    clips.reserve(summaries.size());
    for (const auto& s : summaries) clips.push_back({s.id, s.components});

    const auto result = vcx::calibrate_weights(clips, joined.bitrates, grid, opt.threads);
    write_or_print(vcx::calibration_to_json(result, grid, int64_t(clips.size())), opt.out_path);
    if (!opt.out_path.empty())
        std::printf("pcc=%.6f weights=%g,%g,%g,%g\n", result.pcc, result.weights.w_intra,
                    result.weights.w_l0, result.weights.w_l1, result.weights.w_l2);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Video complexity analyzer: DCT texture energy features with "
                 "feature-domain motion estimation and layer-aware aggregation"};
    app.require_subcommand(1);

    std::string kernels = "auto";
    app.add_option("--kernels", kernels, "Kernel implementation: auto, scalar, avx2")
        ->default_str("auto");

    AnalyzeOptions an;
    auto* analyze = app.add_subcommand("analyze", "Analyze clips and write complexity reports");
    analyze->add_option("inputs", an.inputs, "Input files (.y4m or raw planar YUV)")->required();
    analyze->add_option("--format", an.format, "Input format: auto, y4m, raw")
        ->check(CLI::IsMember({"auto", "y4m", "raw"}))
        ->default_str("auto");
    analyze->add_option("--width", an.width, "Raw input width in pixels");
    analyze->add_option("--height", an.height, "Raw input height in pixels");
    analyze->add_option("--fps", an.fps, "Raw input frame rate (informational)");
    analyze->add_option("--chroma", an.chroma, "Raw input chroma format: 420, 422, 444")
        ->default_str("420");
    analyze->add_option("--mode", an.mode, "Pipeline: vca, vca+me, vca+weights, ivca")
        ->default_str("ivca");
    analyze->add_option("--block-size", an.block_size, "Texture block size (power of two >= 4)")
        ->default_val(32);
    analyze->add_option("--me-window", an.me_window, "Similarity window size in blocks (even)")
        ->default_val(8);
    analyze->add_option("--me-range", an.me_range, "Motion search range in blocks")
        ->default_val(4);
    analyze->add_flag("--me-quantize", an.me_quantize,
                      "Quantized squared-similarity fast path");
    analyze->add_option("--gop-size", an.gop_size, "GOP size (power of two >= 2)")
        ->default_val(4);
    analyze->add_option("--intra-period", an.intra_period,
                        "I-frame spacing (0 = first frame only)")
        ->default_val(250);
    analyze->add_option("--weights", an.weights, "Layer weights wI,wL0,wL1,wL2");
    analyze->add_option("--id", an.id, "Clip id (default: file stem; single input only)");
    analyze->add_option("--json", an.json_path, "JSON report path (single input only)");
    analyze->add_option("--csv", an.csv_path, "CSV report path (single input only)");
    analyze->add_option("--out-dir", an.out_dir, "Directory for <id>.json and <id>.csv reports");
    analyze->add_option("--heatmap-dir", an.heatmap_dir, "Directory for PGM heatmaps");
    analyze->add_option("--heatmap-every", an.heatmap_every,
                        "Write SAD/attenuation heatmaps of every K-th frame");
    analyze->add_option("--threads", an.threads, "Worker threads for per-block feature work")
        ->default_val(1);

    std::vector<std::string> eval_reports;
    std::string eval_bitrates, eval_out;
    auto* evaluate =
        app.add_subcommand("evaluate", "Correlate report complexity against encoder bitrates");
    evaluate->add_option("reports", eval_reports, "JSON report paths")->required();
    evaluate->add_option("--bitrates", eval_bitrates, "CSV with header clip,bitrate")
        ->required();
    evaluate->add_option("--out", eval_out, "Output JSON path (default: stdout)");

    CalibrateOptions cal;
    auto* calibrate =
        app.add_subcommand("calibrate", "Grid-search layer weights maximizing correlation");
    calibrate->add_option("reports", cal.reports, "JSON report paths")->required();
    calibrate->add_option("--bitrates", cal.bitrate_csv, "CSV with header clip,bitrate")
        ->required();
    calibrate->add_option("--out", cal.out_path, "Output JSON path (default: stdout)");
    calibrate->add_option("--grid", cal.grid, "Candidate values for all four axes (comma list)");
    calibrate->add_option("--grid-intra", cal.grid_intra, "Candidates for w_intra");
    calibrate->add_option("--grid-l0", cal.grid_l0, "Candidates for w_l0");
    calibrate->add_option("--grid-l1", cal.grid_l1, "Candidates for w_l1");
    calibrate->add_option("--grid-l2", cal.grid_l2, "Candidates for w_l2");
    calibrate->add_option("--threads", cal.threads, "Worker threads for the grid search")
        ->default_val(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }
    cal.grid_given = calibrate->count("--grid") > 0;
    cal.grid_intra_given = calibrate->count("--grid-intra") > 0;
    cal.grid_l0_given = calibrate->count("--grid-l0") > 0;
    cal.grid_l1_given = calibrate->count("--grid-l1") > 0;
    cal.grid_l2_given = calibrate->count("--grid-l2") > 0;

    try {
        if (!vcx::kernels::select(kernels))
            throw vcx::ConfigError("kernel implementation '" + kernels +
                                   "' is not available on this machine");
        if (analyze->parsed()) return run_analyze(an);
        if (evaluate->parsed()) return run_evaluate(eval_reports, eval_bitrates, eval_out);
        if (calibrate->parsed()) return run_calibrate(cal);
    } catch (const vcx::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    }
    return 0;
}
