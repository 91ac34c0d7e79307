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

#include <vector>

#include "tdf/linalg.hpp"

// Moment-space kernels. An operator on n qubits with t copies acts on 2t legs
// of n wires each: legs 0..t-1 carry U, legs t..2t-1 carry conj(U). Leg 0 is
// the most significant; within a leg wire 0 is the most significant, so
// the bit of (leg c, wire w) is (2t-1-c)*n + (n-1-w).
//
// Every kernel has a plain serial reference and an OpenMP version with the
// same signature. The two must agree to rounding.
namespace tdf::kernels {

/// Offsets of a contiguous wire block [first, first+k) in the n-wire moment
/// space: global index = local_offsets[l] + rest_offsets[r].
struct EmbeddingOffsets {
  std::vector<Eigen::Index> local_offsets;
  std::vector<Eigen::Index> rest_offsets;
};
EmbeddingOffsets embedding_offsets(int first_wire, int block_wires, int n, int t);

namespace serial {

/// acc += weight * U^{(x)t} (x) conj(U)^{(x)t}
void accumulate_tensor_power(const CMatrix& u, int t, Complex weight, CMatrix& acc);

/// Y = E X where E is `local` (a moment operator on `block_wires` wires)
/// embedded on wires [first_wire, first_wire + block_wires) of n.
void apply_embedded_local(const CMatrix& local, int first_wire, int block_wires,
                          int n, int t, const CMatrix& x, CMatrix& y);

/// y = (U^{(x)t} (x) conj(U)^{(x)t}) x, leg by leg.
void apply_tensor_power(const CMatrix& u, int t, const CVector& x, CVector& y);

}  // namespace serial

namespace omp {

void accumulate_tensor_power(const CMatrix& u, int t, Complex weight, CMatrix& acc);
void apply_embedded_local(const CMatrix& local, int first_wire, int block_wires,
                          int n, int t, const CMatrix& x, CMatrix& y);
void apply_tensor_power(const CMatrix& u, int t, const CVector& x, CVector& y);

}  // namespace omp

}  // namespace tdf::kernels
