// Copyright 2026 The tdesign-forge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <string>
#include <vector>

#include "tdf/linalg.hpp"
#include "tdf/mb_extract.hpp"

namespace tdf::qdmx {

// Binary matrix container. Little-endian:
//   "QDMX" | u32 count | u32 dim | count * dim * dim * (f64 re, f64 im)
// Matrices are stored row-major.
void write_matrices(const std::string& path, const std::vector<CMatrix>& matrices);
std::vector<CMatrix> read_matrices(const std::string& path);

/// Writes `path` (QDMX) and `path + ".json"` with the probabilities.
void write_ensemble(const std::string& path, const Ensemble& ensemble);
Ensemble read_ensemble(const std::string& path);

}  // namespace tdf::qdmx
