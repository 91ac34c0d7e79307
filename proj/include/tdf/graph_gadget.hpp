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

#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace tdf {

using Vertex = int;

struct Edge {
  Vertex u;
  Vertex v;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Open graph state with a fixed X-Y plane measurement angle on every
// non-output vertex.
//
// Vertices are 0..num_vertices-1. Edges are kept normalized (u < v) and
// sorted. Measured vertices are read out in ascending vertex order, so an
// outcome string lists its bits in that order; every builder in this header
// numbers vertices row-major, which makes the bit order "row 1 left to right,
// then row 2, ...".
struct OpenGraph {
  int num_vertices = 0;
  std::vector<Edge> edges;
  std::vector<Vertex> inputs;
  std::vector<Vertex> outputs;
  std::map<Vertex, double> angles;

  /// Throws ValidationError on any broken invariant.
  void validate() const;

  std::vector<Vertex> measured() const;
  int num_measured() const { return static_cast<int>(angles.size()); }
  int width() const { return static_cast<int>(inputs.size()); }
  std::vector<std::vector<Vertex>> adjacency() const;

  friend bool operator==(const OpenGraph&, const OpenGraph&) = default;
};

struct VerticalEdge {
  int column;
  int row_a;
  int row_b;
  friend bool operator==(const VerticalEdge&, const VerticalEdge&) = default;
  friend auto operator<=>(const VerticalEdge&, const VerticalEdge&) = default;
};

// Rectangular brickwork-style gadget: every row is a horizontal chain from
// its input (column 0) to its output (last column); vertical CZ edges join
// rows inside one column. angle_table is rows x (columns - 1).
struct BrickLayout {
  int rows = 0;
  int columns = 0;
  std::vector<VerticalEdge> vertical_edges;
  std::vector<std::vector<double>> angle_table;

  void validate() const;
  friend bool operator==(const BrickLayout&, const BrickLayout&) = default;
};

OpenGraph build_brick(const BrickLayout& layout);

/// Recovers the brick layout of a graph built (or composed) from bricks of
/// equal height. Returns nullopt for anything that is not brick shaped.
std::optional<BrickLayout> as_brick(const OpenGraph& g);

/// Identifies the outputs of `first` with the inputs of `second`, in order.
/// Identified vertices take the measurement role of `second`. Edges that
/// appear in both halves cancel, since CZ squares to the identity.
OpenGraph compose(const OpenGraph& first, const OpenGraph& second);
OpenGraph compose_all(std::span<const OpenGraph> gadgets);

/// Disjoint union; inputs and outputs of `top` come first.
OpenGraph parallel(const OpenGraph& top, const OpenGraph& bottom);

/// `width` unmeasured vertices that are both input and output.
OpenGraph identity_gadget(int width);

/// Splits a brick into consecutive column slices holding at most
/// `max_measured` measured vertices each (at least one column per slice).
/// compose_all of the result reproduces the brick exactly.
std::vector<OpenGraph> slice_brick(const OpenGraph& brick, int max_measured);

// n-wire gadget made of two layers of a 2-wire brick: the odd layer acts on
// wire pairs (0,1), (2,3), ... and the even layer on (1,2), (3,4), ...; wires
// not covered in a layer are carried straight through. Wires are 0-indexed.
struct LayeredGadget {
  int n = 0;
  std::vector<std::pair<int, int>> odd_pairs;
  std::vector<std::pair<int, int>> even_pairs;
  std::vector<int> odd_passthrough;
  std::vector<int> even_passthrough;
  OpenGraph brick;

  OpenGraph odd_layer() const;
  OpenGraph even_layer() const;
  OpenGraph to_open_graph() const;
  int qubit_count() const;
};

LayeredGadget build_layered_gadget(int n, const OpenGraph& brick);

namespace presets {

/// One-row, two-column chain: the single-wire teleportation gadget.
BrickLayout teleport_layout(double angle);

/// 2-row, 5-column bricks with vertical edges on columns 3 and 5 (1-based).
BrickLayout s_i1_layout();
BrickLayout s_i2_layout();

/// Same shape as the default bricks with every angle 0 (Clifford only).
BrickLayout clifford_layout();

/// 13-column brick S_I1 ∘ S_I2 ∘ S_I1.
OpenGraph brick_b();
OpenGraph brick_b_clifford();

}  // namespace presets

}  // namespace tdf
