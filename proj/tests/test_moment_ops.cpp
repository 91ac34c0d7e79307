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

#include "tdf/design_metrics.hpp"
#include "tdf/errors.hpp"
#include "tdf/moment_ops.hpp"
#include "test_util.hpp"

using namespace tdf;

namespace {

Ensemble haar_ensemble(Eigen::Index d, int count, std::uint64_t seed) {
  Rng rng = make_stream(seed, 0);
  std::vector<Unitary> u;
  for (int k = 0; k < count; ++k) u.emplace_back(haar_unitary(d, rng));
  return Ensemble::uniform(u);
}

CVector random_vector(Eigen::Index dim, std::uint64_t seed) {
  Rng rng = make_stream(seed, 1);
  std::normal_distribution<double> g;
  CVector v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) v(i) = Complex(g(rng), g(rng));
  return v;
}

}  // namespace

TEST_SUITE("moment_ops") {

TEST_CASE("moments of simple ensembles") {
  const Ensemble id = Ensemble::uniform({Unitary::identity(2)});
  for (int t = 1; t <= 3; ++t) {
    const CMatrix m = dense_moment(id, t);
    CHECK(m.rows() == moment_dim(1, t));
    CHECK(max_abs(m - CMatrix::Identity(m.rows(), m.cols())) == 0);
  }
  std::vector<Unitary> paulis;
  for (int k = 0; k < 4; ++k) paulis.emplace_back(gates::pauli(k));
  const HaarProjector p0(2, 1);
  CHECK(max_abs(dense_moment(Ensemble::uniform(paulis), 1) - p0.dense()) < 1e-15);

  const Ensemble s = enumerate_ensemble(build_brick(presets::s_i1_layout()));
  const CMatrix m = dense_moment(s, 2);
  CHECK(max_abs(m - m.adjoint()) < 1e-12);
  CHECK(max_abs(m - dense_moment_serial(s, 2)) < 1e-12);
}

TEST_CASE("Haar projector") {
  struct Case { Eigen::Index d; int t; int rank; };
  for (const Case c : {Case{2, 1, 1}, Case{2, 2, 2}, Case{2, 3, 5}, Case{4, 2, 2},
                       Case{4, 3, 6}, Case{8, 2, 2}}) {
    const HaarProjector p(c.d, c.t);
    CHECK(p.rank() == c.rank);
    CHECK(p.permutations().size() == static_cast<std::size_t>(c.t == 1 ? 1 : c.t == 2 ? 2 : 6));
    const CMatrix pd = p.dense();
    CHECK(pd.trace().real() == doctest::Approx(c.rank));
    if (p.dim() <= 256) {
      CHECK(max_abs(pd * pd - pd) < 1e-12);
      CHECK(max_abs(pd - pd.adjoint()) < 1e-12);
    } else {
      const CVector x = random_vector(p.dim(), 9), y = random_vector(p.dim(), 10);
      const CVector px = p.apply(x);
      CHECK((p.apply(px) - px).norm() < 1e-10 * px.norm());
      CHECK(std::abs(y.dot(px) - p.apply(y).dot(x)) < 1e-9);
    }
    const RMatrix& g = p.gram();
    for (std::size_t i = 0; i < p.permutations().size(); ++i) {
      for (std::size_t j = 0; j < p.permutations().size(); ++j) {
        std::vector<int> inv(c.t), comp(c.t);
        for (int k = 0; k < c.t; ++k) inv[p.permutations()[i][k]] = k;
        for (int k = 0; k < c.t; ++k) comp[k] = inv[p.permutations()[j][k]];
        CHECK(g(i, j) == doctest::Approx(std::pow(double(c.d), count_cycles(comp))));
      }
    }
    const CVector x = random_vector(p.dim(), 11);
    CHECK((p.apply(x) - pd * x).norm() < 1e-10);
  }
  CHECK(count_cycles({0, 1, 2}) == 3);
  CHECK(count_cycles({1, 2, 0}) == 1);
  CHECK(count_cycles({1, 0, 2}) == 2);
}

TEST_CASE("Haar space is fixed by every unitary") {
  const HaarProjector p(4, 2);
  const RMatrix basis = p.basis();
  Rng rng = make_stream(12, 0);
  for (int k = 0; k < 5; ++k) {
    const CMatrix m = dense_moment(Ensemble::uniform({Unitary(haar_unitary(4, rng))}), 2);
    CHECK(max_abs(m * basis.cast<Complex>() - basis.cast<Complex>()) < 1e-12);
  }
}

TEST_CASE("local projectors") {
  const int n = 4, t = 1;
  const CMatrix local = HaarProjector(4, t).dense();
  std::vector<CMatrix> ps;
  for (int i = 0; i < n - 1; ++i) {
    const MomentOperator op = local_projector(local, i, n, t);
    REQUIRE(op.is_dense());
    const CMatrix& p = op.matrix();
    CHECK(max_abs(p * p - p) < 1e-12);
    CHECK(max_abs(MomentOperator::embedded(n, t, local, i, 2).to_dense() - p) < 1e-14);
    ps.push_back(p);
  }
  CHECK(max_abs(ps[0] * ps[2] - ps[2] * ps[0]) < 1e-12);
  CHECK(max_abs(p_odd(local, n, t).matrix() - ps[0] * ps[2]) < 1e-12);
  CHECK(max_abs(p_even(local, n, t).matrix() - ps[1]) < 1e-12);
  CHECK(max_abs(p_odd(local, n, t, false).to_dense() - ps[0] * ps[2]) < 1e-12);
  CHECK(max_abs(layered_moment(local, n, t) - ps[1] * ps[0] * ps[2]) < 1e-12);
  CHECK(max_abs(layered_moment_operator(local, n, t).to_dense() - ps[1] * ps[0] * ps[2]) <
        1e-12);
  CHECK_THROWS_AS(local_projector(local, 3, n, t), ValidationError);

  const Ensemble e2 = haar_ensemble(4, 3, 13);
  CHECK(max_abs(local_projector(e2, 1, 3, 2).to_dense() -
                embed_local_dense(dense_moment(e2, 2), 1, 3, 2)) < 1e-14);
}

TEST_CASE("matrix-free operators agree with their dense forms") {
  const Ensemble e = haar_ensemble(8, 4, 14);
  const MomentOperator free = MomentOperator::ensemble(3, 1, e.entries());
  const CMatrix dense = dense_moment(e, 1);
  const CVector x = random_vector(free.dim(), 15), y = random_vector(free.dim(), 16);
  CHECK((free.apply(x) - dense * x).norm() < 1e-12);
  CHECK((free.apply_adjoint(x) - dense.adjoint() * x).norm() < 1e-12);
  CHECK(std::abs(y.dot(free.apply(x)) - free.apply_adjoint(y).dot(x)) < 1e-10);
  CHECK(max_abs(free.to_dense() - dense) < 1e-12);
}

TEST_CASE("layer factorisation matches the direct moment") {
  const OpenGraph s1 = build_brick(presets::s_i1_layout());
  const OpenGraph b = presets::brick_b();
  CHECK(lemma3_factorization(build_layered_gadget(2, s1), 1).max_diff < 1e-12);
  CHECK(lemma3_factorization(build_layered_gadget(2, s1), 2).max_diff < 1e-12);
  CHECK(lemma3_factorization(build_layered_gadget(4, s1), 1).max_diff < 1e-12);
  CHECK(lemma3_factorization(build_layered_gadget(3, b), 1).max_diff < 1e-12);
  const Lemma3Result r = lemma3_factorization(build_layered_gadget(2, b), 2);
  CHECK(r.max_diff < 1e-12);
  CHECK(r.direct.rows() == 256);
}

TEST_CASE("brick moment from slices") {
  const OpenGraph s1 = build_brick(presets::s_i1_layout());
  const CMatrix whole = dense_moment(enumerate_ensemble(s1), 2);
  for (int cap : {2, 4, 8}) CHECK(max_abs(brick_moment(s1, 2, cap) - whole) < 1e-12);
  const OpenGraph s12 = compose(s1, build_brick(presets::s_i2_layout()));
  CHECK(max_abs(brick_moment(s12, 1, 4) - dense_moment(enumerate_ensemble(s12), 1)) < 1e-12);
}

TEST_CASE("GLRC Hamiltonian and gaps") {
  const CMatrix haar_local = HaarProjector(4, 1).dense();
  const CMatrix h = glrc_hamiltonian(haar_local, 3, 1);
  CHECK(max_abs(h - h.adjoint()) < 1e-14);
  const GapReport dense = spectral_gap(h);
  CHECK(dense.gap == doctest::Approx(1.0));
  CHECK(dense.kernel_dim == 1);
  CHECK(dense.method == "dense-eigensolve");

  const CMatrix local = brick_moment(presets::brick_b(), 2);
  const CMatrix h2 = glrc_hamiltonian(local, 2, 2);
  const GapReport d2 = spectral_gap(h2);
  CHECK(d2.kernel_dim == 2);
  CHECK(d2.gap > 0);
  const GapReport m2 = spectral_gap(glrc_hamiltonian_map(local, 2, 2), 2, 2, 2.0);
  CHECK(m2.method == "power-iteration");
  CHECK(m2.gap == doctest::Approx(d2.gap).epsilon(1e-6));

  const CVector x = random_vector(moment_dim(3, 1), 17);
  CHECK((glrc_hamiltonian_map(haar_local, 3, 1)(x) - h * x).norm() < 1e-12);
  CHECK_THROWS_AS(spectral_gap(CMatrix(CMatrix::Random(4, 4) * Complex(0, 1) +
                                       CMatrix::Identity(4, 4))),
                  ValidationError);
}

TEST_CASE("TPE norm") {
  const CMatrix b1 = brick_moment(presets::brick_b(), 1);
  CHECK(tpe_norm(layered_moment(b1, 2, 1), HaarProjector(4, 1)).value < 1e-12);

  const CMatrix b2 = brick_moment(presets::brick_b(), 2);
  const HaarProjector p0(4, 2);
  const NormReport d = tpe_norm(b2, p0);
  CHECK(d.value > 0);
  CHECK(d.value < 1);
  const NormReport f = tpe_norm(layered_moment_operator(b2, 2, 2), p0);
  CHECK(f.method == "power-iteration");
  CHECK(f.value == doctest::Approx(d.value).epsilon(1e-6));

  const Ensemble id = Ensemble::uniform({Unitary::identity(4)});
  CHECK(tpe_norm(dense_moment(id, 2), p0).value == doctest::Approx(1.0));
  CHECK_THROWS_AS(tpe_norm(b2, HaarProjector(2, 2)), ValidationError);
}

TEST_CASE("detectability") {
  const CMatrix b1 = brick_moment(presets::brick_b(), 1);
  for (int n : {3, 4}) {
    const DetectabilityResult r = detectability_check(b1, n, 1);
    CHECK(r.holds);
    CHECK(r.lhs < 1e-12);
    CHECK(r.gap == doctest::Approx(1.0));
    CHECK(r.rhs == doctest::Approx(std::pow(1.5, -1.0 / 3.0)));
  }
  const DetectabilityResult r2 = detectability_check(brick_moment(presets::brick_b(), 2), 2, 2);
  CHECK(r2.holds);
  CHECK(r2.lhs <= r2.rhs);
}

TEST_CASE("gap bounds") {
  CHECK(lrc_gap_bound(1) == doctest::Approx(1.0 / 6800).epsilon(1e-12));
  CHECK(glrc_gap_bound(1, 1700) == doctest::Approx(1.0 / 6800).epsilon(1e-12));
  CHECK(lrc_gap_bound(2) == doctest::Approx(9.201225979e-8).epsilon(1e-9));
  CHECK(glrc_gap_bound(1, 1) == doctest::Approx(0.25));
  CHECK(glrc_gap_bound(2, 1) > glrc_gap_bound(2, 2));
  CHECK(glrc_gap_bound(3, 1) < glrc_gap_bound(2, 1));
  CHECK(bound_exponent(LogConvention::kBase10) > bound_exponent(LogConvention::kNatural));
  CHECK(glrc_gap_bound(1, 1, LogConvention::kBase10) == doctest::Approx(0.25));
  CHECK(glrc_gap_bound(2, 1, LogConvention::kBase10) < glrc_gap_bound(2, 1));
  CHECK_THROWS_AS(glrc_gap_bound(0, 1), ValidationError);
  CHECK_THROWS_AS(glrc_gap_bound(1, 0), ValidationError);
}

TEST_CASE("dense budget") {
  const Ensemble e = haar_ensemble(16, 2, 18);
  CHECK(moment_dim(4, 2) == 65536);
  CHECK_THROWS_AS(moment_superoperator(e, 2), BudgetError);
  const MomentOperator free = moment_superoperator(e, 2, true);
  CHECK(free.kind() == MomentOperator::Kind::kEnsemble);
  CHECK_THROWS_AS(free.to_dense(), BudgetError);
  CHECK(moment_superoperator(haar_ensemble(8, 2, 19), 2).is_dense());
}

}  // TEST_SUITE
