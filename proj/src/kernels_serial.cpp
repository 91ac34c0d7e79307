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

#include "tdf/errors.hpp"

namespace tdf::kernels {

EmbeddingOffsets embedding_offsets(int first_wire, int block_wires, int n, int t) {
  if (first_wire < 0 || block_wires < 1 || first_wire + block_wires > n) {
    throw ValidationError("embedding: wire block out of range");
  }
  const int legs = 2 * t;
  // Bit positions, most significant first, for the local and rest indices.
  std::vector<int> local_bits, rest_bits;
  for (int c = 0; c < legs; ++c) {
    for (int w = 0; w < n; ++w) {
      const int bit = (legs - 1 - c) * n + (n - 1 - w);
      if (w >= first_wire && w < first_wire + block_wires) {
        local_bits.push_back(bit);
      } else {
        rest_bits.push_back(bit);
      }
    }
  }
  auto spread = [](const std::vector<int>& bits) {
    const int k = static_cast<int>(bits.size());
    std::vector<Eigen::Index> off(std::size_t(1) << k, 0);
    for (std::size_t v = 0; v < off.size(); ++v) {
      Eigen::Index g = 0;
      for (int b = 0; b < k; ++b) {
        if ((v >> (k - 1 - b)) & 1U) g |= Eigen::Index(1) << bits[b];
      }
      off[v] = g;
    }
    return off;
  };
  return {spread(local_bits), spread(rest_bits)};
}

namespace serial {

void accumulate_tensor_power(const CMatrix& u, int t, Complex weight, CMatrix& acc) {
  const Eigen::Index d = u.rows();
  const int legs = 2 * t;
  Eigen::Index dim = 1;
  for (int c = 0; c < legs; ++c) dim *= d;
  if (acc.rows() != dim || acc.cols() != dim) {
    throw ValidationError("accumulate_tensor_power: accumulator has wrong size");
  }
  std::vector<Eigen::Index> rd(legs), cd(legs);
  for (Eigen::Index r = 0; r < dim; ++r) {
    Eigen::Index q = r;
    for (int c = legs - 1; c >= 0; --c) {
      rd[c] = q % d;
      q /= d;
    }
    for (Eigen::Index col = 0; col < dim; ++col) {
      Eigen::Index p = col;
      for (int c = legs - 1; c >= 0; --c) {
        cd[c] = p % d;
        p /= d;
      }
      Complex v = weight;
      for (int c = 0; c < t; ++c) v *= u(rd[c], cd[c]);
      for (int c = t; c < legs; ++c) v *= std::conj(u(rd[c], cd[c]));
      acc(r, col) += v;
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
  y.setZero(x.rows(), x.cols());
  for (Eigen::Index rest : off.rest_offsets) {
    for (Eigen::Index col = 0; col < x.cols(); ++col) {
      for (Eigen::Index a = 0; a < ld; ++a) {
        Complex s = 0;
        for (Eigen::Index b = 0; b < ld; ++b) {
          s += local(a, b) * x(off.local_offsets[b] + rest, col);
        }
        y(off.local_offsets[a] + rest, col) = s;
      }
    }
  }
}

void apply_tensor_power(const CMatrix& u, int t, const CVector& x, CVector& y) {
  const Eigen::Index d = u.rows();
  const int legs = 2 * t;
  const CMatrix uc = u.conjugate();
  CVector cur = x;
  CVector next(x.size());
  // Leg c has stride d^(legs-1-c).
  Eigen::Index stride = x.size();
  for (int c = 0; c < legs; ++c) {
    stride /= d;
    const CMatrix& g = c < t ? u : uc;
    const Eigen::Index block = stride * d;
    for (Eigen::Index base = 0; base < x.size(); base += block) {
      for (Eigen::Index low = 0; low < stride; ++low) {
        for (Eigen::Index a = 0; a < d; ++a) {
          Complex s = 0;
          for (Eigen::Index b = 0; b < d; ++b) s += g(a, b) * cur(base + b * stride + low);
          next(base + a * stride + low) = s;
        }
      }
    }
    cur.swap(next);
  }
  y = cur;
}

}  // namespace serial

}  // namespace tdf::kernels
