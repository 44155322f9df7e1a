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
#include <cmath>

#include "vcx/kernels.hpp"

namespace vcx::kernels {
namespace {

// Both DCT passes are "accumulate scalar * row" loops:
//   pass 1: tmp = basis * tile          (transforms columns)
//   pass 2: out = tmp * basis^T         (transforms rows, via basis_t rows)
void dct2d_scalar(const double* tile, const double* basis, const double* basis_t, int w,
                  double* tmp, double* out) {
    for (int u = 0; u < w; ++u) {
        double* row = tmp + std::size_t(u) * w;
        std::fill(row, row + w, 0.0);
        const double* brow = basis + std::size_t(u) * w;
        for (int y = 0; y < w; ++y) {
            const double s = brow[y];
            const double* trow = tile + std::size_t(y) * w;
            for (int x = 0; x < w; ++x) row[x] += s * trow[x];
        }
    }
    for (int u = 0; u < w; ++u) {
        double* row = out + std::size_t(u) * w;
        std::fill(row, row + w, 0.0);
        const double* prow = tmp + std::size_t(u) * w;
        for (int x = 0; x < w; ++x) {
            const double s = prow[x];
            const double* btrow = basis_t + std::size_t(x) * w;
            for (int v = 0; v < w; ++v) row[v] += s * btrow[v];
        }
    }
}

double weighted_abs_sum_scalar(const double* values, const double* weights, std::size_t n) {
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) sum += weights[i] * std::fabs(values[i]);
    return sum;
}

double sad_sum_scalar(const double* a, const double* b, std::size_t n) {
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) sum += std::fabs(a[i] - b[i]);
    return sum;
}

CosineParts cosine_parts_scalar(const double* a, const double* b, std::size_t n) {
    CosineParts parts;
    for (std::size_t i = 0; i < n; ++i) {
        parts.dot += a[i] * b[i];
        parts.norm_a += a[i] * a[i];
        parts.norm_b += b[i] * b[i];
    }
    return parts;
}

}  // namespace

const KernelTable& scalar_table() {
    static const KernelTable table{
        "scalar",
        &dct2d_scalar,
        &weighted_abs_sum_scalar,
        &sad_sum_scalar,
        &cosine_parts_scalar,
    };
    return table;
}

}  // namespace vcx::kernels
