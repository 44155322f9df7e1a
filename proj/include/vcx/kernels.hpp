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

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace vcx::kernels {

struct CosineParts {
    double dot = 0.0;
    double norm_a = 0.0;  // sum of a[i]^2
    double norm_b = 0.0;  // sum of b[i]^2
};

/// The arithmetic inner loops, one entry per implementation. The scalar table
/// is the reference semantics; vector tables must agree with it within
/// round-off (covered by the equivalence tests).
struct KernelTable {
    const char* name;

    /// out = basis * tile * basis^T for a w x w row-major tile. `basis_t` is the
    /// transpose of `basis`, `tmp` holds w*w intermediates. w is a multiple of 4.
    void (*dct2d)(const double* tile, const double* basis, const double* basis_t,
                  int w, double* tmp, double* out);

    /// sum_i weights[i] * |values[i]|
    double (*weighted_abs_sum)(const double* values, const double* weights, std::size_t n);

    /// sum_i |a[i] - b[i]|
    double (*sad_sum)(const double* a, const double* b, std::size_t n);

    /// dot product plus both squared norms in one pass
    CosineParts (*cosine_parts)(const double* a, const double* b, std::size_t n);
};

/// Reference implementation, always available.
const KernelTable& scalar_table();

/// Tables usable on this machine (scalar first).
std::vector<const KernelTable*> available_tables();

/// Table used by the library. Defaults to the widest supported vector table;
/// the VCX_KERNELS environment variable ("scalar", "avx2") overrides.
const KernelTable& active();

/// Selects the active table by name. Returns false if the named table is not
/// available on this machine.
bool select(std::string_view name);

}  // namespace vcx::kernels
