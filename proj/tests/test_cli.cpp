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

// End-to-end runs of the installed command-line binary.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "doctest.h"
#include "fixtures.hpp"
#include "vcx/aggregate.hpp"
#include "vcx/report.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout + stderr
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(VCX_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    char buf[4096];
    while (std::size_t n = fread(buf, 1, sizeof(buf), pipe)) result.output.append(buf, n);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream f(path, std::ios::binary);
    REQUIRE(f.good());
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

std::string strip_timing(const std::string& json_text) {
    const auto pos = json_text.find("\"timing\"");
    REQUIRE(pos != std::string::npos);
    return json_text.substr(0, pos);
}

std::string strip_csv_footer_fps(const std::string& csv_text) {
    const auto pos = csv_text.rfind(",fps,");
    REQUIRE(pos != std::string::npos);
    return csv_text.substr(0, pos);
}

// Handcrafted report with a chosen complexity value; evaluate/calibrate only
// look at id, complexity.C and the component sums.
void write_fake_report(const std::filesystem::path& path, const std::string& id, double c,
                       vcx::ComponentSums sums = {}) {
    vcx::ComplexityReport report;
    report.clip_id = id;
    report.mode = "ivca";
    report.block_size = 32;
    report.c = c;
    report.c_baseline = c;
    report.c_layered = c;
    report.components = sums;
    vcx::write_json_report(report, path);
}

}  // namespace

TEST_CASE("analyze: reports, summary line and determinism") {
    fixtures::TempDir dir("vcx_cli");
    const auto clip = dir.path() / "clip.y4m";
    const auto base = fixtures::noise_plane(fixtures::spec(96, 64), 3);
    fixtures::write_y4m(clip, fixtures::translating_clip(base, 6, 16));

    const auto json1 = dir.path() / "r1.json";
    const auto csv1 = dir.path() / "r1.csv";
    const std::string common = "analyze " + clip.string() + " --block-size 16 --mode ivca";

    auto r1 = run(common + " --json " + json1.string() + " --csv " + csv1.string());
    CHECK(r1.exit_code == 0);
    // summary line: id<TAB>mode<TAB>C<TAB>fps
    CHECK(r1.output.find("clip\tivca\t") != std::string::npos);

    const auto json2 = dir.path() / "r2.json";
    const auto csv2 = dir.path() / "r2.csv";
    auto r2 = run(common + " --json " + json2.string() + " --csv " + csv2.string());
    CHECK(r2.exit_code == 0);

    CHECK(strip_timing(slurp(json1)) == strip_timing(slurp(json2)));
    CHECK(strip_csv_footer_fps(slurp(csv1)) == strip_csv_footer_fps(slurp(csv2)));

    // the CSV has one row per frame plus header and footer
    std::istringstream csv(slurp(csv1));
    std::string line;
    int lines = 0;
    while (std::getline(csv, line)) ++lines;
    CHECK(lines == 1 + 6 + 1);
}

TEST_CASE("analyze: raw input requires dimensions") {
    fixtures::TempDir dir("vcx_cli");
    const auto clip = dir.path() / "clip.yuv";
    fixtures::write_raw(clip, {fixtures::constant_plane(fixtures::spec(64, 64), 50)});

    CHECK(run("analyze " + clip.string()).exit_code == 1);
    const auto ok = run("analyze " + clip.string() + " --width 64 --height 64 --json " +
                        (dir.path() / "r.json").string());
    CHECK(ok.exit_code == 0);
}

TEST_CASE("analyze: failure leaves no partial outputs") {
    fixtures::TempDir dir("vcx_cli");
    const auto clip = dir.path() / "trunc.y4m";
    fixtures::write_y4m(clip, {fixtures::constant_plane(fixtures::spec(64, 64), 9),
                               fixtures::constant_plane(fixtures::spec(64, 64), 9, 1)});
    const auto size = std::filesystem::file_size(clip);
    std::filesystem::resize_file(clip, size - 100);  // truncate frame 1

    const auto json = dir.path() / "out.json";
    const auto result = run("analyze " + clip.string() + " --json " + json.string());
    CHECK(result.exit_code == 2);
    CHECK(result.output.find("frame 1") != std::string::npos);
    CHECK(!std::filesystem::exists(json));
}

TEST_CASE("analyze: mode lattice runs from one flag and heatmaps are emitted") {
    fixtures::TempDir dir("vcx_cli");
    const auto clip = dir.path() / "clip.y4m";
    const auto base = fixtures::noise_plane(fixtures::spec(128, 64), 8);
    fixtures::write_y4m(clip, fixtures::translating_clip(base, 7, 16));

    for (const std::string mode : {"vca", "vca+me", "vca+weights", "ivca"}) {
        const auto json = dir.path() / ("m_" + mode + ".json");
        const auto r = run("analyze " + clip.string() + " --block-size 16 --mode '" + mode +
                           "' --json " + json.string());
        CAPTURE(mode);
        CHECK(r.exit_code == 0);
        const auto doc = nlohmann::json::parse(slurp(json));
        CHECK(doc.at("mode").get<std::string>() == mode);
        CHECK(doc.at("frames").size() == 7);
    }

    const auto hm = dir.path() / "maps";
    const auto r = run("analyze " + clip.string() +
                       " --block-size 16 --mode ivca --heatmap-dir " + hm.string() +
                       " --heatmap-every 2 --json " + (dir.path() / "h.json").string());
    CHECK(r.exit_code == 0);
    CHECK(std::filesystem::exists(hm / "clip_f2_sad.pgm"));
    CHECK(std::filesystem::exists(hm / "clip_f2_mu.pgm"));
    CHECK(std::filesystem::exists(hm / "clip_f4_sad.pgm"));
}

TEST_CASE("evaluate: exact join, pcc 1 on proportional data, order free") {
    fixtures::TempDir dir("vcx_cli");
    write_fake_report(dir.path() / "a.json", "a", 1.0);
    write_fake_report(dir.path() / "b.json", "b", 2.0);
    write_fake_report(dir.path() / "c.json", "c", 3.0);

    const auto csv = dir.path() / "bitrates.csv";
    {
        std::ofstream f(csv);
        f << "clip,bitrate\na,1000\nb,2000\nc,3000\n";
    }
    const auto csv_shuffled = dir.path() / "shuffled.csv";
    {
        std::ofstream f(csv_shuffled);
        f << "clip,bitrate\nc,3000\na,1000\nb,2000\n";
    }

    const std::string reports = (dir.path() / "a.json").string() + " " +
                                (dir.path() / "b.json").string() + " " +
                                (dir.path() / "c.json").string();

    const auto out1 = dir.path() / "eval1.json";
    const auto r1 = run("evaluate " + reports + " --bitrates " + csv.string() + " --out " +
                        out1.string());
    CHECK(r1.exit_code == 0);
    const auto doc = nlohmann::json::parse(slurp(out1));
    CHECK(doc.at("pcc").get<double>() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(doc.at("n").get<int>() == 3);
    CHECK(doc.at("slope").get<double>() == doctest::Approx(1000.0).epsilon(1e-9));

    const auto out2 = dir.path() / "eval2.json";
    const auto r2 = run("evaluate " + reports + " --bitrates " + csv_shuffled.string() +
                        " --out " + out2.string());
    CHECK(r2.exit_code == 0);
    CHECK(slurp(out1) == slurp(out2));
}

TEST_CASE("evaluate: missing report is named") {
    fixtures::TempDir dir("vcx_cli");
    write_fake_report(dir.path() / "a.json", "a", 1.0);
    const auto csv = dir.path() / "bitrates.csv";
    {
        std::ofstream f(csv);
        f << "clip,bitrate\na,1000\nghost,500\n";
    }
    const auto r = run("evaluate " + (dir.path() / "a.json").string() + " --bitrates " +
                       csv.string());
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("ghost") != std::string::npos);
}

TEST_CASE("calibrate: single tuple grid echoes it, empty axis is a usage error") {
    fixtures::TempDir dir("vcx_cli");
    write_fake_report(dir.path() / "a.json", "a", 0.0, {1.0, 2.0, 0.5, 0.25});
    write_fake_report(dir.path() / "b.json", "b", 0.0, {2.0, 5.0, 1.0, 0.75});
    write_fake_report(dir.path() / "c.json", "c", 0.0, {0.5, 9.0, 2.0, 0.25});
    const auto csv = dir.path() / "bitrates.csv";
    {
        std::ofstream f(csv);
        f << "clip,bitrate\na,200\nb,500\nc,900\n";
    }
    const std::string reports = (dir.path() / "a.json").string() + " " +
                                (dir.path() / "b.json").string() + " " +
                                (dir.path() / "c.json").string();

    const auto out = dir.path() / "cal.json";
    const auto r = run("calibrate " + reports + " --bitrates " + csv.string() +
                       " --grid-intra 0.11 --grid-l0 0.04 --grid-l1 0.0001 --grid-l2 0.0005" +
                       " --out " + out.string());
    CHECK(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(slurp(out));
    CHECK(doc.at("weights").at("intra").get<double>() == 0.11);
    CHECK(doc.at("weights").at("l0").get<double>() == 0.04);
    CHECK(doc.at("grid").at("tuples").get<int>() == 1);

    const auto bad = run("calibrate " + reports + " --bitrates " + csv.string() +
                         " --grid-l1 ''");
    CHECK(bad.exit_code == 1);
}

TEST_CASE("calibrate: recovers a planted optimum through the CLI") {
    fixtures::TempDir dir("vcx_cli");
    // bitrates proportional to the layer-0 sums only; the other component
    // columns are chosen so no nonzero mix of them is affine in l0
    const double e_i[4] = {0.5, 4.0, 1.0, 2.5};
    const double l0[4] = {3.0, 8.0, 1.5, 5.0};
    const double l1[4] = {7.0, 2.0, 6.5, 3.0};
    const double l2[4] = {0.25, 1.0, 4.0, 2.0};
    std::string reports;
    std::ofstream csv_file(dir.path() / "bitrates.csv");
    csv_file << "clip,bitrate\n";
    for (int i = 0; i < 4; ++i) {
        const std::string id = "clip" + std::to_string(i);
        const auto path = dir.path() / (id + ".json");
        write_fake_report(path, id, 0.0, {e_i[i], l0[i], l1[i], l2[i]});
        reports += path.string() + " ";
        csv_file << id << "," << 1000.0 * l0[i] << "\n";
    }
    csv_file.close();

    const auto out = dir.path() / "cal.json";
    const auto r = run("calibrate " + reports + "--bitrates " +
                       (dir.path() / "bitrates.csv").string() +
                       " --grid 0,0.01,0.04,1 --out " + out.string());
    CHECK(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(slurp(out));
    CHECK(doc.at("pcc").get<double>() == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(doc.at("weights").at("intra").get<double>() == 0.0);
    CHECK(doc.at("weights").at("l0").get<double>() > 0.0);
    CHECK(doc.at("weights").at("l1").get<double>() == 0.0);
    CHECK(doc.at("weights").at("l2").get<double>() == 0.0);
}

TEST_CASE("usage errors exit with 1") {
    CHECK(run("").exit_code == 1);                       // missing subcommand
    CHECK(run("analyze").exit_code == 1);                // missing inputs
    CHECK(run("--kernels warp9 analyze x.y4m").exit_code == 1);
    fixtures::TempDir dir("vcx_cli");
    const auto clip = dir.path() / "c.y4m";
    fixtures::write_y4m(clip, {fixtures::constant_plane(fixtures::spec(32, 32), 1)});
    CHECK(run("analyze " + clip.string() + " --mode warp").exit_code == 1);
    CHECK(run("analyze " + clip.string() + " --weights 1,2").exit_code == 1);
    CHECK(run("analyze " + clip.string() + " --heatmap-every 2").exit_code == 1);
}

TEST_CASE("kernel selection flag is honored") {
    fixtures::TempDir dir("vcx_cli");
    const auto clip = dir.path() / "clip.y4m";
    const auto base = fixtures::noise_plane(fixtures::spec(64, 64), 12);
    fixtures::write_y4m(clip, fixtures::translating_clip(base, 4, 8));

    const auto scalar_json = dir.path() / "scalar.json";
    const auto auto_json = dir.path() / "auto.json";
    CHECK(run("--kernels scalar analyze " + clip.string() + " --block-size 16 --json " +
              scalar_json.string())
              .exit_code == 0);
    CHECK(run("--kernels auto analyze " + clip.string() + " --block-size 16 --json " +
              auto_json.string())
              .exit_code == 0);

    // same features regardless of the kernel table, within round-off
    const auto a = nlohmann::json::parse(slurp(scalar_json));
    const auto b = nlohmann::json::parse(slurp(auto_json));
    const double ca = a.at("complexity").at("C").get<double>();
    const double cb = b.at("complexity").at("C").get<double>();
    CHECK(ca == doctest::Approx(cb).epsilon(1e-9));
}
