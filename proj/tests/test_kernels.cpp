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
#include "tdf/kernels.hpp"
#include "tdf/moment_ops.hpp"

using namespace tdf;

namespace {

CMatrix random_matrix(Eigen::Index rows, Eigen::Index cols, std::uint64_t seed) {
  Rng rng = make_stream(seed, 0);
  std::normal_distribution<double> g;
  CMatrix m(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = Complex(g(rng), g(rng));
  return m;
}

}  // namespace

TEST_SUITE("kernels") {

TEST_CASE("tensor power accumulation") {
  Rng rng = make_stream(31, 0);
  for (int t = 1; t <= 3; ++t) {
    const CMatrix u = haar_unitary(2, rng);
    const Eigen::Index dim = moment_dim(1, t);
    CMatrix serial = CMatrix::Zero(dim, dim), omp = CMatrix::Zero(dim, dim);
    kernels::serial::accumulate_tensor_power(u, t, 0.5, serial);
    kernels::omp::accumulate_tensor_power(u, t, 0.5, omp);
    CHECK(max_abs(serial - omp) < 1e-14);
    const CMatrix direct =
        0.5 * kron(kron_power(u, t), kron_power(CMatrix(u.conjugate()), t));
    CHECK(max_abs(serial - direct) < 1e-14);
  }
}

TEST_CASE("tensor power application") {
  Rng rng = make_stream(32, 0);
  for (int t = 1; t <= 2; ++t) {
    const CMatrix u = haar_unitary(4, rng);
    const Eigen::Index dim = moment_dim(2, t);
    const CVector x = random_matrix(dim, 1, 33 + t).col(0);
    CVector ys, yo;
    kernels::serial::apply_tensor_power(u, t, x, ys);
    kernels::omp::apply_tensor_power(u, t, x, yo);
    CHECK((ys - yo).norm() < 1e-12);
    const CMatrix m = dense_moment(Ensemble::uniform({Unitary(u)}), t);
    CHECK((ys - m * x).norm() < 1e-12);
  }
}

TEST_CASE("embedded local application") {
  struct Case { int first, block, n, t; };
  for (const Case c : {Case{0, 2, 3, 1}, Case{1, 2, 3, 2}, Case{1, 1, 3, 1}, Case{2, 2, 4, 1},
                       Case{0, 2, 2, 2}}) {
    const Eigen::Index ld = moment_dim(c.block, c.t);
    const Eigen::Index dim = moment_dim(c.n, c.t);
    const CMatrix local = random_matrix(ld, ld, 40 + c.first);
    const CMatrix x = random_matrix(dim, 3, 50 + c.n);
    CMatrix ys, yo;
    kernels::serial::apply_embedded_local(local, c.first, c.block, c.n, c.t, x, ys);
    kernels::omp::apply_embedded_local(local, c.first, c.block, c.n, c.t, x, yo);
    CHECK(max_abs(ys - yo) < 1e-12);
    if (c.block == 2) {
      CHECK(max_abs(ys - embed_local_dense(local, c.first, c.n, c.t) * x) < 1e-11);
    }
  }
}

TEST_CASE("embedding offsets cover the space once") {
  const kernels::EmbeddingOffsets off = kernels::embedding_offsets(1, 2, 4, 2);
  CHECK(off.local_offsets.size() == 256);
  CHECK(off.rest_offsets.size() == 256);
  std::vector<int> seen(65536, 0);
  for (auto l : off.local_offsets)
    for (auto r : off.rest_offsets) ++seen[l + r];
  CHECK(std::all_of(seen.begin(), seen.end(), [](int v) { return v == 1; }));
}

TEST_CASE("embedded unitaries match the kernel layout") {
  Rng rng = make_stream(34, 0);
  const CMatrix u = haar_unitary(4, rng);
  const CMatrix local = dense_moment(Ensemble::uniform({Unitary(u)}), 2);
  const CMatrix full = dense_moment(Ensemble::uniform({Unitary(embed_on_wires(u, 1, 3))}), 2);
  CHECK(max_abs(embed_local_dense(local, 1, 3, 2) - full) < 1e-12);
}

}  // TEST_SUITE
