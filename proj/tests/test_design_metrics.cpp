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

#include <cmath>

#include "tdf/design_metrics.hpp"
#include "tdf/errors.hpp"
#include "tdf/moment_ops.hpp"

using namespace tdf;

TEST_SUITE("design_metrics") {

TEST_CASE("Haar sampler") {
  Rng rng = make_stream(21, 0);
  Complex mean = 0;
  const int count = 4000;
  for (int k = 0; k < count; ++k) {
    const CMatrix u = haar_unitary(4, rng);
    CHECK(unitarity_defect(u) < 1e-12);
    mean += u(0, 0);
  }
  CHECK(std::abs(mean / double(count)) < 5.0 * 0.5 / std::sqrt(double(count)));
}

TEST_CASE("exact frame potentials") {
  CHECK(frame_potential_exact(Ensemble::uniform({Unitary::identity(8)}), 1) ==
        doctest::Approx(64));
  std::vector<Unitary> paulis;
  for (int k = 0; k < 4; ++k) paulis.emplace_back(gates::pauli(k));
  CHECK(frame_potential_exact(Ensemble::uniform(paulis), 1) == doctest::Approx(1));
  CHECK(frame_potential_exact(Ensemble::uniform(paulis), 2) == doctest::Approx(4));
}

TEST_CASE("sampled frame potentials") {
  const UnitarySampler haar = [](Rng& rng) { return haar_unitary(4, rng); };
  for (int t : {1, 2}) {
    const FramePotentialEstimate f = frame_potential(haar, 4, t, 3000, 22);
    REQUIRE(f.haar_exact);
    CHECK(*f.haar_exact == doctest::Approx(t == 1 ? 1 : 2));
    CHECK(f.std_error > 0);
    CHECK(std::abs(f.estimate - *f.haar_exact) < 4 * f.std_error);
    CHECK(std::abs(f.haar_reference - *f.haar_exact) < 4 * f.haar_std_error);
  }
  const UnitarySampler fixed = [](Rng&) { return CMatrix(CMatrix::Identity(4, 4)); };
  const FramePotentialEstimate g = frame_potential(fixed, 4, 2, 300, 23, false);
  CHECK(g.estimate == doctest::Approx(256));
  CHECK(g.std_error == doctest::Approx(0).epsilon(1e-12));
  CHECK(g.estimate >= g.haar_reference);
  CHECK_THROWS_AS(frame_potential(fixed, 4, 0, 10, 1), ValidationError);
}

TEST_CASE("frame potential sampling is reproducible") {
  const UnitarySampler haar = [](Rng& rng) { return haar_unitary(2, rng); };
  const FramePotentialEstimate a = frame_potential(haar, 2, 1, 200, 24, false);
  const FramePotentialEstimate b = frame_potential(haar, 2, 1, 200, 24, false);
  CHECK(a.estimate == b.estimate);
  CHECK(a.std_error == b.std_error);
}

TEST_CASE("single-step bound") {
  CHECK(theorem1_k(0.5, 2, 1, 0.5).k_required == 2);
  const KBoundReport a = theorem1_k(0.9, 8, 2, 0.01);
  CHECK(a.raw == doctest::Approx(83.18157).epsilon(1e-6));
  CHECK(a.k_required == 84);
  CHECK(a.n == 3);
  const KBoundReport b = theorem1_k(0.25, 4, 2, 1e-3);
  CHECK(b.raw == doctest::Approx(6.98289).epsilon(1e-5));
  CHECK(b.k_required == 7);
  const KBoundReport c = theorem1_k(0.5, 2, 1, 4);
  CHECK(c.raw == doctest::Approx(-1));
  CHECK(c.k_required == 1);
  CHECK(theorem1_k(0.5, 8, 2, 0.01).k_required >= theorem1_k(0.5, 8, 2, 0.1).k_required);
  CHECK(theorem1_k(0.9, 8, 2, 0.01).k_required >= theorem1_k(0.5, 8, 2, 0.01).k_required);
  CHECK_THROWS_AS(theorem1_k(0.0, 8, 2, 0.01), PreconditionError);
  CHECK_THROWS_AS(theorem1_k(1.0, 8, 2, 0.01), PreconditionError);
  CHECK_THROWS_AS(theorem1_k(0.5, 8, 2, 0.0), ValidationError);
}

TEST_CASE("layered bound") {
  CHECK(theorem3_min_n(1) == 5);
  CHECK(theorem3_min_n(2) == 7);
  CHECK(theorem3_min_n(4) == 10);
  const KBoundReport a = theorem3_k(5, 1, 0.01, 1700);
  CHECK(a.raw == doctest::Approx(329305.0746).epsilon(1e-9));
  CHECK(a.k_required == 329306);
  const KBoundReport b = theorem3_k(8, 2, 0.1, 1);
  CHECK(b.raw == doctest::Approx(513747.282).epsilon(1e-9));
  CHECK(b.k_required == 513748);
  const KBoundReport half = theorem3_k(5, 1, 0.005, 1700);
  CHECK(half.k_required == 357587);
  CHECK(half.raw - a.raw == doctest::Approx(28281.4447).epsilon(1e-8));
  CHECK(theorem3_k(8, 2, 0.1, 1, LogConvention::kBase10).k_required == 29135332);
  CHECK(theorem3_k(6, 1, 0.01, 1700).k_required > a.k_required);
  CHECK(theorem3_k(5, 1, 0.01, 3400).k_required > a.k_required);
  CHECK_THROWS_AS(theorem3_k(4, 1, 0.01, 1700), PreconditionError);
  CHECK_THROWS_AS(theorem3_k(6, 2, 0.01, 1700), PreconditionError);
}

TEST_CASE("concatenation scan of the norm") {
  const CMatrix b1 = brick_moment(presets::brick_b(), 1);
  const auto flat = concatenation_scan_tpe(layered_moment(b1, 3, 1), HaarProjector(8, 1), 4);
  REQUIRE(flat.size() == 4);
  for (const auto& p : flat) {
    CHECK(p.value < 1e-12);
    CHECK(p.power_prediction < 1e-12);
  }

  const CMatrix b2 = brick_moment(presets::brick_b(), 2);
  const HaarProjector p0(4, 2);
  const auto scan = concatenation_scan_tpe(b2, p0, 6);
  for (const auto& p : scan) {
    CHECK(p.value == doctest::Approx(p.power_prediction).epsilon(1e-8));
  }
  CHECK(subdominant_radius(b2, p0) == doctest::Approx(scan[0].value).epsilon(1e-8));
  CHECK_THROWS_AS(concatenation_scan_tpe(b2, p0, 0), ValidationError);
}

TEST_CASE("submultiplicativity of a non-normal instance") {
  const CMatrix b1 = brick_moment(build_brick(presets::s_i1_layout()), 2);
  const CMatrix m = layered_moment(b1, 2, 2);
  const auto scan = concatenation_scan_tpe(m, HaarProjector(4, 2), 8);
  for (const auto& p : scan) CHECK(p.value <= p.power_prediction + 1e-12);
  for (std::size_t i = 1; i < scan.size(); ++i) CHECK(scan[i].value <= scan[i - 1].value + 1e-12);
}

TEST_CASE("concatenation scan of frame potentials") {
  const LayeredSampler sampler(build_layered_gadget(3, presets::brick_b()));
  const auto scan = concatenation_scan_frame(sampler, 1, {0, 1, 3}, 600, 25);
  REQUIRE(scan.size() == 3);
  CHECK(scan[0].value == doctest::Approx(64));
  for (std::size_t i = 1; i < scan.size(); ++i) {
    CHECK(std::abs(scan[i].value - 1) < 5 * scan[i].std_error + 0.05);
    CHECK(scan[i].haar_reference > 0);
  }
  const auto again = concatenation_scan_frame(sampler, 1, {1}, 200, 26);
  const auto same = concatenation_scan_frame(sampler, 1, {1}, 200, 26);
  CHECK(again[0].value == same[0].value);
  CHECK_THROWS_AS(concatenation_scan_frame(sampler, 1, {-1}, 10, 1), ValidationError);
}

}  // TEST_SUITE
