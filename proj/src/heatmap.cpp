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

#include "vcx/heatmap.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <string>

namespace vcx {

void write_heatmap_pgm(std::span<const double> values, const BlockGrid& grid,
                       const std::filesystem::path& path) {
    if (values.size() != std::size_t(grid.block_count))
        throw ConfigError("heatmap expects " + std::to_string(grid.block_count) +
                          " values, got " + std::to_string(values.size()));

    const auto [min_it, max_it] = std::minmax_element(values.begin(), values.end());
    const double lo = *min_it;
    const double hi = *max_it;
    const double span = hi - lo;

    std::vector<unsigned char> pixels(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        pixels[i] = span > 0.0
                        ? (unsigned char)(std::llround((values[i] - lo) / span * 255.0))
                        : (unsigned char)(128);
    }

    std::ofstream file(path, std::ios::binary);
    if (!file) throw IoError("cannot open " + path.string() + " for writing");
    file << "P5\n" << grid.blocks_per_row << " " << grid.blocks_per_col << "\n255\n";
    file.write(reinterpret_cast<const char*>(pixels.data()), std::streamsize(pixels.size()));
    if (!file) throw IoError("write failed: " + path.string());
}

}  // namespace vcx
