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
#include <doctest.h>

#include <numbers>

#include "tdf/ensemble_algebra.hpp"
#include "tdf/errors.hpp"
#include "tdf/gadget_io.hpp"
#include "tdf/graph_gadget.hpp"
#include "tdf/mb_extract.hpp"
#include "test_util.hpp"

using namespace tdf;

namespace {

constexpr double kPi4 = std::numbers::pi / 4;

int count_horizontal(const OpenGraph& g, int columns) {
  int h = 0;
  for (const Edge& e : g.edges) {
    if (e.v == e.u + 1 && e.u / columns == e.v / columns) ++h;
  }
  return h;
}

BrickLayout small_brick(double a, double b) {
  BrickLayout l;
  l.rows = 2;
  l.columns = 2;
  l.vertical_edges = {{0, 0, 1}};
  l.angle_table = {{a}, {b}};
  return l;
}

}  // namespace

TEST_SUITE("graph_gadget") {

TEST_CASE("single wire, single measured vertex") {
  const OpenGraph g = build_brick(presets::teleport_layout(0));
  CHECK(g.num_vertices == 2);
  CHECK(g.edges.size() == 1);
  CHECK(g.num_measured() == 1);
  CHECK(g.inputs == std::vector<Vertex>{0});
  CHECK(g.outputs == std::vector<Vertex>{1});
}

TEST_CASE("two independent wires") {
  BrickLayout l;
  l.rows = 2;
  l.columns = 2;
  l.angle_table = {{kPi4}, {kPi4}};
  const OpenGraph g = build_brick(l);
  CHECK(g.num_vertices == 4);
  CHECK(g.num_measured() == 2);
  CHECK(g.edges.size() == 2);
  const CMatrix expected = kron(testing::h_z(kPi4, 1), testing::h_z(kPi4, 0));
  CHECK(max_abs(extract_unitary_circuit(g, OutcomeString::parse("10")).matrix() - expected) <
        1e-14);
}

TEST_CASE("default 5-column bricks") {
  for (const BrickLayout& l : {presets::s_i1_layout(), presets::s_i2_layout()}) {
    const OpenGraph g = build_brick(l);
    CHECK(g.num_vertices == 10);
    CHECK(g.num_measured() == 8);
    CHECK(count_horizontal(g, 5) == 8);
    CHECK(g.edges.size() == 8 + l.vertical_edges.size());
    for (const auto& e : l.vertical_edges) {
      CHECK((e.column == 2 || e.column == 4));
    }
    for (const auto& row : l.angle_table) {
      for (double a : row) {
        const double q = a / kPi4;
        CHECK(std::abs(q - std::round(q)) < 1e-12);
        CHECK(std::abs(q) <= 2);
      }
    }
  }
  CHECK(presets::s_i1_layout().angle_table != presets::s_i2_layout().angle_table);
}

TEST_CASE("malformed layouts are rejected") {
  BrickLayout l = presets::s_i1_layout();
  l.angle_table[1].pop_back();
  CHECK_THROWS_AS(build_brick(l), ValidationError);
  l = presets::s_i1_layout();
  l.vertical_edges.push_back({7, 0, 1});
  CHECK_THROWS_AS(build_brick(l), ValidationError);
}

TEST_CASE("S_I1 . S_I2 . S_I1 gives the 13-column brick") {
  const OpenGraph s1 = build_brick(presets::s_i1_layout());
  const OpenGraph s2 = build_brick(presets::s_i2_layout());
  const OpenGraph b = compose(compose(s1, s2), s1);
  CHECK(b.num_vertices == 26);
  CHECK(b.num_measured() == 24);
  CHECK(b == presets::brick_b());
  const auto layout = as_brick(b);
  REQUIRE(layout);
  CHECK(layout->columns == 13);
  CHECK(layout->rows == 2);
}

TEST_CASE("composing with the identity gadget") {
  const OpenGraph s1 = build_brick(presets::s_i1_layout());
  CHECK(compose(s1, identity_gadget(2)) == s1);
  CHECK(compose(identity_gadget(2), s1) == s1);
}

TEST_CASE("two single-wire gadgets chain") {
  const double a1 = 0.3, a2 = kPi4;
  const OpenGraph g =
      compose(build_brick(presets::teleport_layout(a1)), build_brick(presets::teleport_layout(a2)));
  CHECK(g.num_vertices == 3);
  CHECK(g.num_measured() == 2);
  CHECK(g.edges.size() == 2);
  for (int m1 = 0; m1 < 2; ++m1) {
    for (int m2 = 0; m2 < 2; ++m2) {
      const OutcomeString m{{static_cast<std::uint8_t>(m1), static_cast<std::uint8_t>(m2)}};
      const CMatrix expected = testing::h_z(a2, m2) * testing::h_z(a1, m1);
      CHECK(equal_up_to_phase(extract_unitary_statevector(g, m).unitary.matrix(), expected));
    }
  }
}

TEST_CASE("width mismatch") {
  CHECK_THROWS_AS(compose(build_brick(presets::teleport_layout(0)), presets::brick_b()),
                  ValidationError);
}

TEST_CASE("composition is associative") {
  const OpenGraph a = build_brick(small_brick(kPi4, 0));
  const OpenGraph b = build_brick(small_brick(-kPi4, kPi4 * 2));
  const OpenGraph c = build_brick(small_brick(0.4, -0.9));
  const OpenGraph left = compose(compose(a, b), c);
  const OpenGraph right = compose(a, compose(b, c));
  REQUIRE(left.num_measured() == 6);
  for (std::uint64_t i = 0; i < 64; ++i) {
    const OutcomeString m = OutcomeString::from_index(i, 6);
    CHECK(max_abs(extract_unitary_statevector(left, m).unitary.matrix() -
                  extract_unitary_statevector(right, m).unitary.matrix()) < 1e-12);
  }
}

TEST_CASE("layered gadgets") {
  const OpenGraph b = presets::brick_b();
  CHECK_THROWS_AS(build_layered_gadget(1, b), ValidationError);

  const LayeredGadget g2 = build_layered_gadget(2, b);
  CHECK(g2.odd_pairs == std::vector<std::pair<int, int>>{{0, 1}});
  CHECK(g2.even_pairs.empty());
  CHECK(g2.even_passthrough == std::vector<int>{0, 1});
  CHECK(g2.qubit_count() == 26);

  const LayeredGadget g3 = build_layered_gadget(3, b);
  CHECK(g3.odd_pairs == std::vector<std::pair<int, int>>{{0, 1}});
  CHECK(g3.even_pairs == std::vector<std::pair<int, int>>{{1, 2}});
  CHECK(g3.odd_passthrough == std::vector<int>{2});
  CHECK(g3.even_passthrough == std::vector<int>{0});
  CHECK(g3.qubit_count() == 51);

  const LayeredGadget g4 = build_layered_gadget(4, b);
  CHECK(g4.odd_pairs == std::vector<std::pair<int, int>>{{0, 1}, {2, 3}});
  CHECK(g4.even_pairs == std::vector<std::pair<int, int>>{{1, 2}});
  CHECK(g4.even_passthrough == std::vector<int>{0, 3});
  CHECK(g4.qubit_count() == 76);

  for (int n = 2; n <= 10; ++n) {
    const LayeredGadget g = build_layered_gadget(n, b);
    CHECK(g.qubit_count() == 25 * n - 24);
    CHECK(g.to_open_graph().num_vertices == 25 * n - 24);
    CHECK(g.to_open_graph().width() == n);
  }
}

TEST_CASE("slicing a brick and composing the slices back") {
  const OpenGraph b = presets::brick_b();
  for (int cap : {2, 4, 8}) {
    const auto slices = slice_brick(b, cap);
    for (const auto& s : slices) CHECK(s.num_measured() <= cap);
    CHECK(compose_all(slices) == b);
  }
}

TEST_CASE("JSON round trip is exact") {
  for (const OpenGraph& g : {presets::brick_b(), build_brick(presets::teleport_layout(0.1234567890123)),
                             build_layered_gadget(3, presets::brick_b()).to_open_graph()}) {
    const std::string text = gadget_to_json(g).dump();
    CHECK(gadget_from_json(nlohmann::json::parse(text)) == g);
  }
  const BrickLayout l = presets::s_i2_layout();
  CHECK(layout_from_json(nlohmann::json::parse(layout_to_json(l).dump())) == l);
}

TEST_CASE("dot export lists every vertex") {
  const std::string dot = gadget_to_dot(presets::brick_b());
  CHECK(dot.find("graph") != std::string::npos);
  CHECK(dot.find("25") != std::string::npos);
}

}  // TEST_SUITE
