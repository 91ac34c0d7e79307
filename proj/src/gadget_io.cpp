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

#include "tdf/gadget_io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "tdf/errors.hpp"

namespace tdf {

using nlohmann::json;

namespace {

void require_keys(const json& j, const std::set<std::string>& allowed,
                  const char* what) {
  if (!j.is_object()) throw ValidationError(std::string(what) + " must be a JSON object");
  for (const auto& item : j.items()) {
    if (!allowed.count(item.key())) {
      throw ValidationError(std::string(what) + ": unknown key \"" +
                            item.key() + "\"");
    }
  }
  for (const auto& key : allowed) {
    if (!j.contains(key)) {
      throw ValidationError(std::string(what) + ": missing key \"" + key + "\"");
    }
  }
}

}  // namespace

json gadget_to_json(const OpenGraph& g) {
  json j;
  j["vertices"] = g.num_vertices;
  j["edges"] = json::array();
  for (const Edge& e : g.edges) j["edges"].push_back({e.u, e.v});
  j["inputs"] = g.inputs;
  j["outputs"] = g.outputs;
  j["angles"] = json::object();
  for (const auto& [v, a] : g.angles) j["angles"][std::to_string(v)] = a;
  return j;
}

OpenGraph gadget_from_json(const json& j) {
  require_keys(j, {"vertices", "edges", "inputs", "outputs", "angles"},
               "gadget");
  OpenGraph g;
  try {
    g.num_vertices = j.at("vertices").get<int>();
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) {
        throw ValidationError("gadget: edges must be [u, v] pairs");
      }
      const int u = e[0].get<int>(), v = e[1].get<int>();
      g.edges.push_back(u < v ? Edge{u, v} : Edge{v, u});
    }
    g.inputs = j.at("inputs").get<std::vector<Vertex>>();
    g.outputs = j.at("outputs").get<std::vector<Vertex>>();
    for (const auto& item : j.at("angles").items()) {
      std::size_t used = 0;
      const int v = std::stoi(item.key(), &used);
      if (used != item.key().size()) {
        throw ValidationError("gadget: angle key is not a vertex id");
      }
      g.angles[v] = item.value().get<double>();
    }
  } catch (const json::exception& e) {
    throw ValidationError(std::string("gadget: ") + e.what());
  } catch (const std::invalid_argument&) {
    throw ValidationError("gadget: angle key is not a vertex id");
  }
  std::sort(g.edges.begin(), g.edges.end());
  g.validate();
  return g;
}

json layout_to_json(const BrickLayout& layout) {
  json j;
  j["rows"] = layout.rows;
  j["columns"] = layout.columns;
  j["vertical_edges"] = json::array();
  for (const auto& e : layout.vertical_edges) {
    j["vertical_edges"].push_back({e.column, e.row_a, e.row_b});
  }
  j["angles"] = layout.angle_table;
  return j;
}

BrickLayout layout_from_json(const json& j) {
  require_keys(j, {"rows", "columns", "vertical_edges", "angles"}, "layout");
  BrickLayout layout;
  try {
    layout.rows = j.at("rows").get<int>();
    layout.columns = j.at("columns").get<int>();
    for (const auto& e : j.at("vertical_edges")) {
      if (!e.is_array() || e.size() != 3) {
        throw ValidationError("layout: vertical edges are [column, row_a, row_b]");
      }
      layout.vertical_edges.push_back(
          {e[0].get<int>(), e[1].get<int>(), e[2].get<int>()});
    }
    layout.angle_table =
        j.at("angles").get<std::vector<std::vector<double>>>();
  } catch (const json::exception& e) {
    throw ValidationError(std::string("layout: ") + e.what());
  }
  layout.validate();
  return layout;
}

OpenGraph read_gadget_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open gadget file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ValidationError("gadget file " + path + ": " + e.what());
  }
  if (j.contains("rows")) return build_brick(layout_from_json(j));
  return gadget_from_json(j);
}

void write_gadget_file(const std::string& path, const OpenGraph& g) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write gadget file: " + path);
  out << gadget_to_json(g).dump() << "\n";
}

std::string gadget_to_dot(const OpenGraph& g) {
  std::ostringstream os;
  os << "graph gadget {\n";
  std::set<Vertex> inputs(g.inputs.begin(), g.inputs.end());
  for (Vertex v = 0; v < g.num_vertices; ++v) {
    os << "  " << v << " [shape=" << (inputs.count(v) ? "box" : "circle");
    const auto it = g.angles.find(v);
    if (it != g.angles.end()) os << ", label=\"" << v << "\\n" << it->second << "\"";
    os << "];\n";
  }
  for (const Edge& e : g.edges) os << "  " << e.u << " -- " << e.v << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace tdf
