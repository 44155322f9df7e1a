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

// Brute-force reference computations, independent of the library's kernel and
// transform code paths. Everything here is written from the defining formulas
// with no shared helpers, so it stays a valid cross-check.

#pragma once

#include <cmath>
#include <numbers>
#include <vector>

namespace oracle {

// O(w^4) type-II orthonormal 2-D DCT straight from the definition.
inline std::vector<double> dct2d(const std::vector<double>& tile, int w) {
    std::vector<double> coeffs(std::size_t(w) * w, 0.0);
    const double pi = std::numbers::pi;
    for (int u = 0; u < w; ++u) {
        for (int v = 0; v < w; ++v) {
            double sum = 0.0;
            for (int y = 0; y < w; ++y)
                for (int x = 0; x < w; ++x)
                    sum += tile[std::size_t(y) * w + x] *
                           std::cos(pi * (2 * y + 1) * u / (2.0 * w)) *
                           std::cos(pi * (2 * x + 1) * v / (2.0 * w));
            const double au = (u == 0) ? std::sqrt(1.0 / w) : std::sqrt(2.0 / w);
            const double av = (v == 0) ? std::sqrt(1.0 / w) : std::sqrt(2.0 / w);
            coeffs[std::size_t(u) * w + v] = au * av * sum;
        }
    }
    return coeffs;
}

// Exponentially weighted absolute-coefficient sum over the oracle DCT.
inline double block_energy(const std::vector<double>& tile, int w) {
    const auto coeffs = dct2d(tile, w);
    double energy = 0.0;
    for (int i = 0; i < w; ++i) {
        for (int j = 0; j < w; ++j) {
            const double r = (double(i) * double(j)) / (double(w) * double(w));
            energy += std::exp(std::fabs(r * r - 1.0)) *
                      std::fabs(coeffs[std::size_t(i) * w + j]);
        }
    }
    return energy;
}

// Direct per-pixel-average of a value list (spatial/temporal normalization).
inline double normalized_sum(const std::vector<double>& values, int block_size) {
    double sum = 0.0;
    for (double v : values) sum += v;
    return sum / (double(values.size()) * block_size * block_size);
}

}  // namespace oracle
