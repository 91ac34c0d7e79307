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

#include "tdf/graph_gadget.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "tdf/errors.hpp"
#include "tdf/linalg.hpp"

namespace tdf {

namespace {

Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

// Contiguous per-row vertex ranges [input, output], if the graph is numbered
// row by row.
std::optional<std::vector<std::pair<Vertex, Vertex>>> row_segments(
    const OpenGraph& g) {
  if (g.inputs.size() != g.outputs.size()) return std::nullopt;
  std::vector<std::pair<Vertex, Vertex>> rows;
  Vertex next = 0;
  for (std::size_t i = 0; i < g.inputs.size(); ++i) {
    if (g.inputs[i] != next || g.outputs[i] < g.inputs[i]) return std::nullopt;
    rows.emplace_back(g.inputs[i], g.outputs[i]);
    next = g.outputs[i] + 1;
  }
  if (next != g.num_vertices) return std::nullopt;
  return rows;
}

void finalize_edges(std::vector<Edge>& edges) {
  std::sort(edges.begin(), edges.end());
}

}  // namespace

void OpenGraph::validate() const {
  auto fail = [](const std::string& what) {
    throw ValidationError("invalid open graph: " + what);
  };
  if (num_vertices < 0) fail("negative vertex count");
  auto in_range = [&](Vertex v) { return v >= 0 && v < num_vertices; };
  std::set<Edge> seen;
  for (const Edge& e : edges) {
    if (!in_range(e.u) || !in_range(e.v)) fail("edge endpoint out of range");
    if (e.u == e.v) fail("self-loop");
    if (!seen.insert(make_edge(e.u, e.v)).second) fail("duplicate edge");
  }
  if (inputs.size() != outputs.size()) fail("|inputs| != |outputs|");
  std::set<Vertex> in_set, out_set;
  for (Vertex v : inputs) {
    if (!in_range(v)) fail("input out of range");
    if (!in_set.insert(v).second) fail("repeated input");
  }
  for (Vertex v : outputs) {
    if (!in_range(v)) fail("output out of range");
    if (!out_set.insert(v).second) fail("repeated output");
  }
  for (const auto& [v, angle] : angles) {
    if (!in_range(v)) fail("angle on vertex out of range");
    if (out_set.count(v)) fail("output vertex carries an angle");
    if (!std::isfinite(angle)) fail("non-finite angle");
  }
  for (Vertex v = 0; v < num_vertices; ++v) {
    if (!out_set.count(v) && !angles.count(v)) {
      fail("vertex " + std::to_string(v) + " is neither output nor measured");
    }
  }
}

std::vector<Vertex> OpenGraph::measured() const {
  std::vector<Vertex> out;
  out.reserve(angles.size());
  for (const auto& kv : angles) out.push_back(kv.first);
  return out;
}

std::vector<std::vector<Vertex>> OpenGraph::adjacency() const {
  std::vector<std::vector<Vertex>> adj(num_vertices);
  for (const Edge& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  return adj;
}

void BrickLayout::validate() const {
  auto fail = [](const std::string& what) {
    throw ValidationError("invalid brick layout: " + what);
  };
  if (rows < 1) fail("rows must be >= 1");
  if (columns < 1) fail("columns must be >= 1");
  if (static_cast<int>(angle_table.size()) != rows) {
    fail("angle table has " + std::to_string(angle_table.size()) +
         " rows, expected " + std::to_string(rows));
  }
  for (const auto& row : angle_table) {
    if (static_cast<int>(row.size()) != columns - 1) {
      fail("angle table row has " + std::to_string(row.size()) +
           " entries, expected " + std::to_string(columns - 1));
    }
    for (double a : row) {
      if (!std::isfinite(a)) fail("non-finite angle");
    }
  }
  std::set<VerticalEdge> seen;
  for (VerticalEdge e : vertical_edges) {
    if (e.column < 0 || e.column >= columns) fail("vertical edge column");
    if (e.row_a < 0 || e.row_a >= rows || e.row_b < 0 || e.row_b >= rows ||
        e.row_a == e.row_b) {
      fail("vertical edge rows");
    }
    if (e.row_a > e.row_b) std::swap(e.row_a, e.row_b);
    if (!seen.insert(e).second) fail("duplicate vertical edge");
  }
}

OpenGraph build_brick(const BrickLayout& layout) {
  layout.validate();
  const int c = layout.columns;
  auto id = [c](int row, int col) { return row * c + col; };
  OpenGraph g;
  g.num_vertices = layout.rows * c;
  for (int r = 0; r < layout.rows; ++r) {
    for (int col = 0; col + 1 < c; ++col) {
      g.edges.push_back(make_edge(id(r, col), id(r, col + 1)));
      g.angles[id(r, col)] = layout.angle_table[r][col];
    }
    g.inputs.push_back(id(r, 0));
    g.outputs.push_back(id(r, c - 1));
  }
  for (const VerticalEdge& e : layout.vertical_edges) {
    g.edges.push_back(make_edge(id(e.row_a, e.column), id(e.row_b, e.column)));
  }
  finalize_edges(g.edges);
  return g;
}

std::optional<BrickLayout> as_brick(const OpenGraph& g) {
  const auto rows = row_segments(g);
  if (!rows || rows->empty()) return std::nullopt;
  const int c = rows->front().second - rows->front().first + 1;
  for (const auto& [in, out] : *rows) {
    if (out - in + 1 != c) return std::nullopt;
  }
  BrickLayout layout;
  layout.rows = static_cast<int>(rows->size());
  layout.columns = c;
  std::vector<std::vector<bool>> chain(layout.rows,
                                       std::vector<bool>(c > 1 ? c - 1 : 0));
  for (const Edge& e : g.edges) {
    const int ru = e.u / c, cu = e.u % c, rv = e.v / c, cv = e.v % c;
    if (ru == rv && std::abs(cu - cv) == 1) {
      chain[ru][std::min(cu, cv)] = true;
    } else if (cu == cv && ru != rv) {
      layout.vertical_edges.push_back({cu, std::min(ru, rv), std::max(ru, rv)});
    } else {
      return std::nullopt;
    }
  }
  for (const auto& row : chain) {
    for (bool present : row) {
      if (!present) return std::nullopt;
    }
  }
  layout.angle_table.assign(layout.rows, std::vector<double>(c - 1));
  for (int r = 0; r < layout.rows; ++r) {
    for (int col = 0; col + 1 < c; ++col) {
      const auto it = g.angles.find(r * c + col);
      if (it == g.angles.end()) return std::nullopt;
      layout.angle_table[r][col] = it->second;
    }
  }
  if (static_cast<int>(g.angles.size()) != layout.rows * (c - 1)) {
    return std::nullopt;
  }
  std::sort(layout.vertical_edges.begin(), layout.vertical_edges.end());
  return layout;
}

OpenGraph compose(const OpenGraph& first, const OpenGraph& second) {
  first.validate();
  second.validate();
  if (first.width() != second.width()) {
    std::ostringstream os;
    os << "compose: width mismatch (" << first.width() << " outputs vs "
       << second.width() << " inputs)";
    throw ValidationError(os.str());
  }
  std::vector<Vertex> map1(first.num_vertices, -1);
  std::vector<Vertex> map2(second.num_vertices, -1);
  const auto rows1 = row_segments(first);
  const auto rows2 = row_segments(second);
  int next = 0;
  if (rows1 && rows2) {
    // Keep row-major numbering: row i of the result is row i of `first`
    // followed by row i of `second` minus its (identified) input.
    for (std::size_t i = 0; i < rows1->size(); ++i) {
      for (Vertex v = (*rows1)[i].first; v <= (*rows1)[i].second; ++v) {
        map1[v] = next++;
      }
      map2[(*rows2)[i].first] = map1[first.outputs[i]];
      for (Vertex v = (*rows2)[i].first + 1; v <= (*rows2)[i].second; ++v) {
        map2[v] = next++;
      }
    }
  } else {
    for (Vertex v = 0; v < first.num_vertices; ++v) map1[v] = next++;
    for (std::size_t i = 0; i < second.inputs.size(); ++i) {
      map2[second.inputs[i]] = map1[first.outputs[i]];
    }
    for (Vertex v = 0; v < second.num_vertices; ++v) {
      if (map2[v] < 0) map2[v] = next++;
    }
  }
  OpenGraph g;
  g.num_vertices = next;
  std::set<Edge> edges;
  auto toggle = [&edges](Edge e) {
    if (!edges.erase(e)) edges.insert(e);
  };
  for (const Edge& e : first.edges) toggle(make_edge(map1[e.u], map1[e.v]));
  for (const Edge& e : second.edges) toggle(make_edge(map2[e.u], map2[e.v]));
  g.edges.assign(edges.begin(), edges.end());
  for (const auto& [v, a] : first.angles) g.angles[map1[v]] = a;
  for (const auto& [v, a] : second.angles) g.angles[map2[v]] = a;
  for (Vertex v : first.inputs) g.inputs.push_back(map1[v]);
  for (Vertex v : second.outputs) g.outputs.push_back(map2[v]);
  return g;
}

OpenGraph compose_all(std::span<const OpenGraph> gadgets) {
  if (gadgets.empty()) throw ValidationError("compose_all: no gadgets");
  OpenGraph g = gadgets.front();
  for (std::size_t k = 1; k < gadgets.size(); ++k) g = compose(g, gadgets[k]);
  return g;
}

OpenGraph parallel(const OpenGraph& top, const OpenGraph& bottom) {
  OpenGraph g = top;
  const int offset = top.num_vertices;
  g.num_vertices += bottom.num_vertices;
  for (const Edge& e : bottom.edges) {
    g.edges.push_back({e.u + offset, e.v + offset});
  }
  for (Vertex v : bottom.inputs) g.inputs.push_back(v + offset);
  for (Vertex v : bottom.outputs) g.outputs.push_back(v + offset);
  for (const auto& [v, a] : bottom.angles) g.angles[v + offset] = a;
  finalize_edges(g.edges);
  return g;
}

OpenGraph identity_gadget(int width) {
  if (width < 1) throw ValidationError("identity gadget width must be >= 1");
  OpenGraph g;
  g.num_vertices = width;
  for (Vertex v = 0; v < width; ++v) {
    g.inputs.push_back(v);
    g.outputs.push_back(v);
  }
  return g;
}

std::vector<OpenGraph> slice_brick(const OpenGraph& brick, int max_measured) {
  const auto layout = as_brick(brick);
  if (!layout) throw ValidationError("slice_brick: gadget is not brick shaped");
  const int measured_columns = layout->columns - 1;
  if (measured_columns == 0) return {brick};
  const int step = std::max(1, max_measured / layout->rows);
  std::vector<OpenGraph> slices;
  for (int start = 0; start < measured_columns; start += step) {
    const int end = std::min(start + step, measured_columns);  // output column
    BrickLayout part;
    part.rows = layout->rows;
    part.columns = end - start + 1;
    part.angle_table.assign(part.rows, {});
    for (int r = 0; r < part.rows; ++r) {
      part.angle_table[r].assign(layout->angle_table[r].begin() + start,
                                 layout->angle_table[r].begin() + end);
    }
    for (const VerticalEdge& e : layout->vertical_edges) {
      // A shared boundary column keeps its CZs in the earlier slice.
      const bool owns_first_column = start == 0;
      if (e.column == start && !owns_first_column) continue;
      if (e.column >= start && e.column <= end) {
        part.vertical_edges.push_back({e.column - start, e.row_a, e.row_b});
      }
    }
    slices.push_back(build_brick(part));
  }
  return slices;
}

namespace {

OpenGraph layer_graph(int n, const std::vector<std::pair<int, int>>& pairs,
                      const OpenGraph& brick) {
  std::optional<OpenGraph> g;
  auto append = [&g](const OpenGraph& block) {
    g = g ? parallel(*g, block) : block;
  };
  int wire = 0;
  std::size_t p = 0;
  while (wire < n) {
    if (p < pairs.size() && pairs[p].first == wire) {
      append(brick);
      wire += 2;
      ++p;
    } else {
      append(identity_gadget(1));
      wire += 1;
    }
  }
  return *g;
}

}  // namespace

OpenGraph LayeredGadget::odd_layer() const {
  return layer_graph(n, odd_pairs, brick);
}

OpenGraph LayeredGadget::even_layer() const {
  return layer_graph(n, even_pairs, brick);
}

OpenGraph LayeredGadget::to_open_graph() const {
  return compose(odd_layer(), even_layer());
}

int LayeredGadget::qubit_count() const {
  return to_open_graph().num_vertices;
}

LayeredGadget build_layered_gadget(int n, const OpenGraph& brick) {
  if (n < 2) {
    throw ValidationError("layered gadget needs n >= 2, got " +
                          std::to_string(n));
  }
  brick.validate();
  if (brick.width() != 2) {
    throw ValidationError("layered gadget brick must have 2 inputs/outputs");
  }
  LayeredGadget lg;
  lg.n = n;
  lg.brick = brick;
  for (int w = 0; w + 1 < n; w += 2) lg.odd_pairs.emplace_back(w, w + 1);
  if (n % 2 == 1) lg.odd_passthrough.push_back(n - 1);
  lg.even_passthrough.push_back(0);
  for (int w = 1; w + 1 < n; w += 2) lg.even_pairs.emplace_back(w, w + 1);
  if (n % 2 == 0) lg.even_passthrough.push_back(n - 1);
  return lg;
}

namespace presets {

namespace {

constexpr double kQuarter = kPi / 4;
constexpr double kHalf = kPi / 2;

BrickLayout two_row_brick(std::vector<std::vector<double>> angles) {
  BrickLayout layout;
  layout.rows = 2;
  layout.columns = 5;
  layout.vertical_edges = {{2, 0, 1}, {4, 0, 1}};
  layout.angle_table = std::move(angles);
  return layout;
}

}  // namespace

BrickLayout teleport_layout(double angle) {
  BrickLayout layout;
  layout.rows = 1;
  layout.columns = 2;
  layout.angle_table = {{angle}};
  return layout;
}

// Both angle tables yield inverse-closed, uniformly sampled 256-element
// ensembles; their composition S_I1 ∘ S_I2 ∘ S_I1 passes the universality
// checks in lie_universality.
BrickLayout s_i1_layout() {
  return two_row_brick({{0.0, 0.0, -kQuarter, 0.0}, {0.0, 0.0, -kQuarter, 0.0}});
}

BrickLayout s_i2_layout() {
  return two_row_brick({{kHalf, kQuarter, kHalf, -kHalf},
                        {-kHalf, -kQuarter, -kHalf, kHalf}});
}

BrickLayout clifford_layout() {
  return two_row_brick({{0.0, 0.0, 0.0, 0.0}, {0.0, 0.0, 0.0, 0.0}});
}

OpenGraph brick_b() {
  const OpenGraph s1 = build_brick(s_i1_layout());
  const OpenGraph s2 = build_brick(s_i2_layout());
  return compose(compose(s1, s2), s1);
}

OpenGraph brick_b_clifford() {
  const OpenGraph s = build_brick(clifford_layout());
  return compose(compose(s, s), s);
}

}  // namespace presets

}  // namespace tdf
