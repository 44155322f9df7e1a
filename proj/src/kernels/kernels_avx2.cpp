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

// Built with -mavx2 -mfma on x86-64; every entry point below is only reached
// through the runtime-dispatched table after a cpuid check.

#include "vcx/kernels.hpp"

#if defined(__AVX2__) && defined(__FMA__)

#include <immintrin.h>

#include <cmath>
#include <cstring>

namespace vcx::kernels {
namespace {

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(lo) + _mm_cvtsd_f64(_mm_unpackhi_pd(lo, lo));
}

// w is a multiple of 4 (block sizes are powers of two >= 4), so the row loops
// need no scalar tail.
void axpy_rows(const double* matrix, const double* scale_rows, int w, double* out) {
    for (int u = 0; u < w; ++u) {
        double* row = out + std::size_t(u) * w;
        std::memset(row, 0, sizeof(double) * w);
        const double* srow = scale_rows + std::size_t(u) * w;
        for (int y = 0; y < w; ++y) {
            const __m256d s = _mm256_set1_pd(srow[y]);
            const double* mrow = matrix + std::size_t(y) * w;
            for (int x = 0; x < w; x += 4) {
                __m256d acc = _mm256_loadu_pd(row + x);
                acc = _mm256_fmadd_pd(s, _mm256_loadu_pd(mrow + x), acc);
                _mm256_storeu_pd(row + x, acc);
            }
        }
    }
}

void dct2d_avx2(const double* tile, const double* basis, const double* basis_t, int w,
                double* tmp, double* out) {
    axpy_rows(tile, basis, w, tmp);     // tmp[u][x]  = sum_y basis[u][y] * tile[y][x]
    axpy_rows(basis_t, tmp, w, out);    // out[u][v]  = sum_x tmp[u][x] * basis_t[x][v]
}

double weighted_abs_sum_avx2(const double* values, const double* weights, std::size_t n) {
    const __m256d abs_mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d v = _mm256_and_pd(_mm256_loadu_pd(values + i), abs_mask);
        acc = _mm256_fmadd_pd(_mm256_loadu_pd(weights + i), v, acc);
    }
    double sum = hsum(acc);
    for (; i < n; ++i) sum += weights[i] * std::fabs(values[i]);
    return sum;
}

double sad_sum_avx2(const double* a, const double* b, std::size_t n) {
    const __m256d abs_mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
        acc = _mm256_add_pd(acc, _mm256_and_pd(d, abs_mask));
    }
    double sum = hsum(acc);
    for (; i < n; ++i) sum += std::fabs(a[i] - b[i]);
    return sum;
}

CosineParts cosine_parts_avx2(const double* a, const double* b, std::size_t n) {
    __m256d dot = _mm256_setzero_pd();
    __m256d naa = _mm256_setzero_pd();
    __m256d nbb = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d va = _mm256_loadu_pd(a + i);
        const __m256d vb = _mm256_loadu_pd(b + i);
        dot = _mm256_fmadd_pd(va, vb, dot);
        naa = _mm256_fmadd_pd(va, va, naa);
        nbb = _mm256_fmadd_pd(vb, vb, nbb);
    }
    CosineParts parts{hsum(dot), hsum(naa), hsum(nbb)};
    for (; i < n; ++i) {
        parts.dot += a[i] * b[i];
        parts.norm_a += a[i] * a[i];
        parts.norm_b += b[i] * b[i];
    }
    return parts;
}

const KernelTable avx2_kernels{
    "avx2",
    &dct2d_avx2,
    &weighted_abs_sum_avx2,
    &sad_sum_avx2,
    &cosine_parts_avx2,
};

}  // namespace

const KernelTable* avx2_table_or_null() { return &avx2_kernels; }

}  // namespace vcx::kernels

#else

namespace vcx::kernels {

const KernelTable* avx2_table_or_null() { return nullptr; }

}  // namespace vcx::kernels

#endif
