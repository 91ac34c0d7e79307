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

#include "tdf/design_metrics.hpp"
#include "tdf/ensemble_algebra.hpp"
#include "tdf/errors.hpp"
#include "tdf/graph_gadget.hpp"
#include "tdf/mb_extract.hpp"
#include "tdf/moment_ops.hpp"
#include "test_util.hpp"

using namespace tdf;

namespace {

Ensemble paulis() {
  std::vector<Unitary> u;
  for (int k = 0; k < 4; ++k) u.emplace_back(gates::pauli(k));
  return Ensemble::uniform(u);
}

}  // namespace

TEST_SUITE("ensemble_algebra") {

TEST_CASE("phase equality") {
  Rng rng = make_stream(1, 0);
  for (int k = 0; k < 10; ++k) {
    const CMatrix u = haar_unitary(4, rng);
    const CMatrix v = haar_unitary(4, rng);
    const Complex phase = std::polar(1.0, std::numbers::pi / 7);
    CHECK(equal_up_to_phase(u, u));
    CHECK(equal_up_to_phase(u, CMatrix(phase * u)));
    CHECK(equal_up_to_phase(CMatrix(phase * u), u));
    CHECK(equal_up_to_phase(u, v) == equal_up_to_phase(v, u));
    CHECK(equal_up_to_phase(u, v) == equal_up_to_phase(CMatrix(phase * u), CMatrix(phase * v)));
    CHECK_FALSE(equal_up_to_phase(u, v));
  }
  CHECK_FALSE(equal_up_to_phase(gates::pauli(0), gates::pauli(1)));
  for (double a : {std::numbers::pi / 4, std::numbers::pi / 2, 1.0}) {
    CHECK_FALSE(equal_up_to_phase(testing::h_z(a, 0), testing::h_z(a, 1)));
  }
  CHECK_THROWS_AS(equal_up_to_phase(gates::pauli(1), CMatrix(CMatrix::Identity(4, 4))),
                  ValidationError);
}

TEST_CASE("inverse closure") {
  const InverseClosureReport p = inverse_closed(paulis());
  CHECK(p.closed);
  CHECK(p.unmatched.empty());

  const Ensemble single = Ensemble::uniform({Unitary(testing::h_z(std::numbers::pi / 4, 0))});
  const InverseClosureReport s = inverse_closed(single);
  CHECK_FALSE(s.closed);
  CHECK(s.unmatched == std::vector<std::size_t>{0});

  for (const BrickLayout& l : {presets::s_i1_layout(), presets::s_i2_layout()}) {
    const Ensemble e = enumerate_ensemble(build_brick(l));
    const InverseClosureReport r = inverse_closed(e);
    CHECK(r.closed);
    CHECK(r.max_residual < 1e-9);
    CHECK(r.witness_pairs.size() == 256);
    for (const auto& w : r.witness_pairs) {
      const CMatrix product = e[w.i].unitary.matrix() * e[w.j].unitary.matrix();
      CHECK(phase_identity_residual(product) < 1e-9);
    }
    const UniformityReport u = check_uniform(e);
    CHECK(u.uniform);
    CHECK(u.max_deviation < 1e-10);
  }
}

TEST_CASE("dedup up to phase") {
  const CMatrix u = testing::h_z(0.3, 0);
  const Ensemble pair({{0.5, Unitary(u)}, {0.5, Unitary(CMatrix(std::polar(1.0, 0.7) * u))}});
  const Ensemble merged = dedup_up_to_phase(pair);
  REQUIRE(merged.size() == 1);
  CHECK(merged[0].probability == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(max_abs(merged[0].unitary.matrix() - u) == 0);

  CHECK(dedup_up_to_phase(paulis()).size() == 4);

  const Ensemble clifford = enumerate_ensemble(build_brick(presets::clifford_layout()));
  const Ensemble collapsed = dedup_up_to_phase(clifford);
  CHECK(collapsed.size() < 64);
  double total = 0;
  for (const auto& e : collapsed.entries()) total += e.probability;
  CHECK(std::abs(total - 1) < 1e-12);
}

TEST_CASE("dedup keeps the moments and the inverse closure") {
  const Ensemble e = enumerate_ensemble(build_brick(presets::s_i1_layout()));
  const Ensemble d = dedup_up_to_phase(e);
  CHECK(inverse_closed(d).closed);
  for (int t = 1; t <= 2; ++t) {
    CHECK(max_abs(dense_moment(e, t) - dense_moment(d, t)) < 1e-10);
  }
}

TEST_CASE("uniformity check") {
  const Ensemble skew({{0.25, Unitary::identity(2)}, {0.75, Unitary(gates::pauli(1))}});
  const UniformityReport r = check_uniform(skew);
  CHECK_FALSE(r.uniform);
  CHECK(r.max_deviation == doctest::Approx(0.25));
}

}  // TEST_SUITE
