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

#include <json.hpp>

#include "tdf/graph_gadget.hpp"

namespace tdf {

// Gadget JSON:
//   {"vertices": N, "edges": [[u, v], ...], "inputs": [...],
//    "outputs": [...], "angles": {"<vertex>": radians, ...}}
nlohmann::json gadget_to_json(const OpenGraph& g);
OpenGraph gadget_from_json(const nlohmann::json& j);

// Layout JSON:
//   {"rows": R, "columns": C, "vertical_edges": [[column, row_a, row_b], ...],
//    "angles": [[...], ...]}
nlohmann::json layout_to_json(const BrickLayout& layout);
BrickLayout layout_from_json(const nlohmann::json& j);

OpenGraph read_gadget_file(const std::string& path);
void write_gadget_file(const std::string& path, const OpenGraph& g);

/// Graphviz rendering; measured vertices are labelled with their angle.
std::string gadget_to_dot(const OpenGraph& g);

}  // namespace tdf
