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

#include <fstream>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "vcx/video_io.hpp"

using namespace vcx;

TEST_CASE("y4m: minimal legal header") {
    fixtures::TempDir dir("vcx_y4m");
    const auto path = dir.path() / "one.y4m";
    fixtures::write_y4m(path, {fixtures::constant_plane(fixtures::spec(64, 64), 100)});

    Y4mReader reader(path);
    CHECK(reader.spec().width == 64);
    CHECK(reader.spec().height == 64);
    CHECK(reader.spec().frame_rate == doctest::Approx(30.0));
    CHECK(reader.spec().chroma == ChromaFormat::C420);
    CHECK(reader.spec().bit_depth == 8);

    auto plane = reader.next();
    REQUIRE(plane.has_value());
    CHECK(plane->samples.size() == 4096);
    CHECK(plane->frame_index == 0);
    CHECK(!reader.next().has_value());
}

TEST_CASE("y4m: frame count and display order preserved") {
    fixtures::TempDir dir("vcx_y4m");
    const auto path = dir.path() / "three.y4m";
    std::vector<LumaPlane> planes;
    for (int i = 0; i < 3; ++i)
        planes.push_back(fixtures::constant_plane(fixtures::spec(32, 16), uint8_t(10 * i), i));
    fixtures::write_y4m(path, planes);

    Y4mReader reader(path);
    int64_t count = 0;
    while (auto plane = reader.next()) {
        CHECK(plane->frame_index == count);
        CHECK(plane->samples[0] == uint8_t(10 * count));
        ++count;
    }
    CHECK(count == 3);
}

TEST_CASE("y4m: colorspace variants and rejection") {
    fixtures::TempDir dir("vcx_y4m");
    auto write_with_cs = [&](const std::string& cs) {
        const auto path = dir.path() / (cs + ".y4m");
        std::vector<LumaPlane> planes{
            fixtures::constant_plane(fixtures::spec(16, 16,
                                                    cs.starts_with("444") ? ChromaFormat::C444
                                                    : cs.starts_with("422")
                                                        ? ChromaFormat::C422
                                                        : ChromaFormat::C420),
                                     50)};
        fixtures::write_y4m(path, planes, cs);
        return path;
    };

    CHECK(Y4mReader(write_with_cs("420jpeg")).spec().chroma == ChromaFormat::C420);
    CHECK(Y4mReader(write_with_cs("420mpeg2")).spec().chroma == ChromaFormat::C420);
    CHECK(Y4mReader(write_with_cs("422")).spec().chroma == ChromaFormat::C422);
    CHECK(Y4mReader(write_with_cs("444")).spec().chroma == ChromaFormat::C444);
    CHECK_THROWS_AS(Y4mReader(write_with_cs("420p10")), FormatError);
}

TEST_CASE("y4m: malformed header reports the problem") {
    fixtures::TempDir dir("vcx_y4m");
    const auto path = dir.path() / "bad.y4m";
    {
        std::ofstream f(path, std::ios::binary);
        f << "JUNKHDR W64 H64\n";
    }
    CHECK_THROWS_AS(Y4mReader{path}, FormatError);

    const auto no_dims = dir.path() / "nodims.y4m";
    {
        std::ofstream f(no_dims, std::ios::binary);
        f << "YUV4MPEG2 F30:1\n";
    }
    CHECK_THROWS_AS(Y4mReader{no_dims}, FormatError);
}

TEST_CASE("y4m: truncation mid-frame names the frame index") {
    fixtures::TempDir dir("vcx_y4m");
    const auto path = dir.path() / "trunc.y4m";
    std::vector<LumaPlane> planes;
    for (int i = 0; i < 3; ++i)
        planes.push_back(fixtures::constant_plane(fixtures::spec(64, 64), 1, i));
    fixtures::write_y4m(path, planes);

    // Cut the file in the middle of frame 2's payload.
    const auto full = std::filesystem::file_size(path);
    const auto frame_bytes = planes[0].spec.frame_bytes() + 6;  // + FRAME\n
    std::filesystem::resize_file(path, full - frame_bytes / 2);

    Y4mReader reader(path);
    CHECK(reader.next().has_value());
    CHECK(reader.next().has_value());
    try {
        reader.next();
        FAIL("expected FormatError");
    } catch (const FormatError& e) {
        CHECK(std::string(e.what()).find("frame 2") != std::string::npos);
    }
}

TEST_CASE("raw yuv: frame arithmetic") {
    fixtures::TempDir dir("vcx_raw");
    const auto path = dir.path() / "clip.yuv";
    std::vector<LumaPlane> planes;
    for (int i = 0; i < 3; ++i)
        planes.push_back(fixtures::noise_plane(fixtures::spec(64, 64), 7 + uint64_t(i), 0, 255, i));
    fixtures::write_raw(path, planes);

    CHECK(std::filesystem::file_size(path) == 18432);  // 3 x 6144
    RawYuvReader reader(path, fixtures::spec(64, 64));
    CHECK(reader.frame_count() == 3);
    int count = 0;
    while (reader.next()) ++count;
    CHECK(count == 3);
}

TEST_CASE("raw yuv: empty file yields an empty stream") {
    fixtures::TempDir dir("vcx_raw");
    const auto path = dir.path() / "empty.yuv";
    std::ofstream(path, std::ios::binary).flush();
    RawYuvReader reader(path, fixtures::spec(64, 64));
    CHECK(reader.frame_count() == 0);
    CHECK(!reader.next().has_value());
}

TEST_CASE("raw yuv: off-by-one size is rejected with both sizes") {
    fixtures::TempDir dir("vcx_raw");
    const auto path = dir.path() / "bad.yuv";
    {
        std::ofstream f(path, std::ios::binary);
        std::vector<char> bytes(6145, 3);
        f.write(bytes.data(), std::streamsize(bytes.size()));
    }
    try {
        RawYuvReader reader(path, fixtures::spec(64, 64));
        FAIL("expected FormatError");
    } catch (const FormatError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("6145") != std::string::npos);
        CHECK(msg.find("6144") != std::string::npos);
    }
}

TEST_CASE("raw yuv: luma round-trip is byte exact") {
    fixtures::TempDir dir("vcx_raw");
    const auto path = dir.path() / "rt.yuv";
    std::vector<LumaPlane> planes;
    for (int i = 0; i < 4; ++i)
        planes.push_back(fixtures::noise_plane(fixtures::spec(20, 12, ChromaFormat::C422),
                                               100 + uint64_t(i), 0, 255, i));
    fixtures::write_raw(path, planes);

    RawYuvReader reader(path, fixtures::spec(20, 12, ChromaFormat::C422));
    for (int i = 0; i < 4; ++i) {
        auto plane = reader.next();
        REQUIRE(plane.has_value());
        CHECK(plane->samples == planes[std::size_t(i)].samples);
    }
    CHECK(!reader.next().has_value());
}

TEST_CASE("block grid geometry") {
    const BlockGrid g1 = make_block_grid(64, 64, 32);
    CHECK(g1.blocks_per_row == 2);
    CHECK(g1.blocks_per_col == 2);
    CHECK(g1.block_count == 4);

    const BlockGrid g2 = make_block_grid(100, 60, 32);
    CHECK(g2.blocks_per_row == 4);
    CHECK(g2.blocks_per_col == 2);
    CHECK(g2.block_count == 8);

    CHECK_THROWS_AS(make_block_grid(8, 8, 16), ConfigError);   // larger than both dims
    CHECK_THROWS_AS(make_block_grid(64, 64, 24), ConfigError); // not a power of two
    CHECK_THROWS_AS(make_block_grid(64, 64, 2), ConfigError);  // below minimum
    CHECK_NOTHROW(make_block_grid(16, 512, 32));               // exceeds one dimension only
}

TEST_CASE("tile extraction covers every pixel exactly once and pads by replication") {
    const auto plane = fixtures::noise_plane(fixtures::spec(100, 60), 42);
    const BlockGrid grid = make_block_grid(100, 60, 32);
    std::vector<double> tile(32 * 32);

    std::vector<int> covered(100 * 60, 0);
    for (int k = 0; k < grid.block_count; ++k) {
        extract_tile(plane, grid, k, tile.data());
        const int ox = (k % grid.blocks_per_row) * 32;
        const int oy = (k / grid.blocks_per_row) * 32;
        for (int y = 0; y < 32; ++y) {
            for (int x = 0; x < 32; ++x) {
                const int px = ox + x;
                const int py = oy + y;
                if (px < 100 && py < 60) {
                    CHECK(tile[std::size_t(y) * 32 + x] == double(plane.at(px, py)));
                    covered[std::size_t(py) * 100 + px]++;
                } else {
                    // padded region replicates the nearest in-bounds sample
                    const int cx = std::min(px, 99);
                    const int cy = std::min(py, 59);
                    CHECK(tile[std::size_t(y) * 32 + x] == double(plane.at(cx, cy)));
                }
            }
        }
    }
    for (int c : covered) CHECK(c == 1);
}

TEST_CASE("padded tile of a constant frame stays constant") {
    const auto plane = fixtures::constant_plane(fixtures::spec(40, 40), 77);
    const BlockGrid grid = make_block_grid(40, 40, 32);
    std::vector<double> tile(32 * 32);
    for (int k = 0; k < grid.block_count; ++k) {
        extract_tile(plane, grid, k, tile.data());
        for (double v : tile) CHECK(v == 77.0);
    }
}
