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


#include "tdf/kernels.hpp"

#include <cstdint>

#include "tdf/errors.hpp"

namespace tdf::kernels::omp {

void accumulate_tensor_power(const CMatrix& u, int t, Complex weight, CMatrix& acc) {
  const CMatrix a = kron_power(u, t);
  const CMatrix ac = a.conjugate();
  const Eigen::Index m = a.rows();
  if (acc.rows() != m * m || acc.cols() != m * m) {
    throw ValidationError("accumulate_tensor_power: accumulator has wrong size");
  }
  // acc(r1 m + r2, c1 m + c2) += w a(r1, c1) conj(a(r2, c2)); Eigen storage is
  // column-major so the column block loop is outermost.
#pragma omp parallel for collapse(2) schedule(static)
  for (Eigen::Index c1 = 0; c1 < m; ++c1) {
    for (Eigen::Index r1 = 0; r1 < m; ++r1) {
      const Complex s = weight * a(r1, c1);
      if (s == Complex(0)) continue;
      acc.block(r1 * m, c1 * m, m, m) += s * ac;
    }
  }
}

void apply_embedded_local(const CMatrix& local, int first_wire, int block_wires,
                          int n, int t, const CMatrix& x, CMatrix& y) {
  const EmbeddingOffsets off = embedding_offsets(first_wire, block_wires, n, t);
  const Eigen::Index ld = static_cast<Eigen::Index>(off.local_offsets.size());
  if (local.rows() != ld || local.cols() != ld) {
    throw ValidationError("apply_embedded_local: local operator has wrong size");
  }
  y.resize(x.rows(), x.cols());
  const std::int64_t rests = static_cast<std::int64_t>(off.rest_offsets.size());
  // Gather rows of one rest index into a block, multiply, scatter back.
#pragma omp parallel for schedule(static)
  for (std::int64_t r = 0; r < rests; ++r) {
    const Eigen::Index rest = off.rest_offsets[r];
    CMatrix block(ld, x.cols());
    for (Eigen::Index b = 0; b < ld; ++b) block.row(b) = x.row(off.local_offsets[b] + rest);
    const CMatrix out = local * block;
    for (Eigen::Index a = 0; a < ld; ++a) y.row(off.local_offsets[a] + rest) = out.row(a);
  }
}

void apply_tensor_power(const CMatrix& u, int t, const CVector& x, CVector& y) {
  const Eigen::Index d = u.rows();
  const int legs = 2 * t;
  const CMatrix uc = u.conjugate();
  CVector cur = x;
  CVector next(x.size());
  Eigen::Index stride = x.size();
  for (int c = 0; c < legs; ++c) {
    stride /= d;
    const CMatrix& g = c < t ? u : uc;
    const Eigen::Index block = stride * d;
    const std::int64_t blocks = x.size() / block;
    // View each block as a d x stride row-major panel and left-multiply by g.
#pragma omp parallel for schedule(static)
    for (std::int64_t k = 0; k < blocks; ++k) {
      using Panel = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
      Eigen::Map<const Panel> in(cur.data() + k * block, d, stride);
      Eigen::Map<Panel> out(next.data() + k * block, d, stride);
      out.noalias() = g * in;
    }
    cur.swap(next);
  }
  y = cur;
}

}  // namespace tdf::kernels::omp
