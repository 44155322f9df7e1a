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

#include <filesystem>
#include <span>

#include "vcx/types.hpp"

namespace vcx {

/// Writes per-block values as a binary PGM (P5, maxval 255), one pixel per
/// block, linearly scaled so min -> 0 and max -> 255. Constant input maps to
/// 128 everywhere.
void write_heatmap_pgm(std::span<const double> values, const BlockGrid& grid,
                       const std::filesystem::path& path);

}  // namespace vcx
