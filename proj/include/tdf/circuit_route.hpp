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

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tdf/errors.hpp"
#include "tdf/graph_gadget.hpp"

namespace tdf::circuit {

// Brick circuit product over an arbitrary complex scalar, so the same gate
// sequence can be evaluated in double and in extended precision.
//
// `half_phases(row, col)` returns (e^{-i a/2}, e^{+i a/2}) for the angle a of
// the measured vertex at (row, col); `inv_sqrt2` is 1/sqrt(2) in the scalar
// type. Row 0 is the most significant wire. Returns the dim x dim matrix in
// row-major order.
template <class T, class HalfPhases>
std::vector<T> brick_product(const BrickLayout& layout,
                             const std::vector<std::uint8_t>& bits,
                             HalfPhases&& half_phases, const T& inv_sqrt2) {
  const int rows = layout.rows;
  const int measured_columns = layout.columns - 1;
  if (static_cast<int>(bits.size()) != rows * measured_columns) {
    throw ValidationError("outcome string length " +
                          std::to_string(bits.size()) + " != " +
                          std::to_string(rows * measured_columns) +
                          " measured vertices");
  }
  const std::size_t dim = std::size_t(1) << rows;
  std::vector<T> u(dim * dim, T(0));
  for (std::size_t i = 0; i < dim; ++i) u[i * dim + i] = T(1);

  auto mask_of = [rows](int row) { return std::size_t(1) << (rows - 1 - row); };

  auto apply_cz = [&](int row_a, int row_b) {
    const std::size_t both = mask_of(row_a) | mask_of(row_b);
    for (std::size_t r = 0; r < dim; ++r) {
      if ((r & both) == both) {
        for (std::size_t c = 0; c < dim; ++c) u[r * dim + c] = -u[r * dim + c];
      }
    }
  };

  // Left-multiplies by g = [[g00, g01], [g10, g11]] on wire `row`.
  auto apply_1q = [&](int row, const T& g00, const T& g01, const T& g10,
                      const T& g11) {
    const std::size_t mask = mask_of(row);
    for (std::size_t r0 = 0; r0 < dim; ++r0) {
      if (r0 & mask) continue;
      const std::size_t r1 = r0 | mask;
      for (std::size_t c = 0; c < dim; ++c) {
        const T a = u[r0 * dim + c];
        const T b = u[r1 * dim + c];
        u[r0 * dim + c] = g00 * a + g01 * b;
        u[r1 * dim + c] = g10 * a + g11 * b;
      }
    }
  };

  for (int col = 0; col < layout.columns; ++col) {
    for (const VerticalEdge& e : layout.vertical_edges) {
      if (e.column == col) apply_cz(e.row_a, e.row_b);
    }
    if (col == measured_columns) break;
    for (int row = 0; row < rows; ++row) {
      const auto [em, ep] = half_phases(row, col);
      const bool flip = bits[static_cast<std::size_t>(row * measured_columns + col)] != 0;
      // H Z^m Z(a) = (1/sqrt2) [[e-, s e+], [e-, -s e+]], s = (-1)^m.
      const T a = inv_sqrt2 * em;
      const T b = flip ? T(-(inv_sqrt2 * ep)) : T(inv_sqrt2 * ep);
      apply_1q(row, a, b, a, T(-b));
    }
  }
  return u;
}

}  // namespace tdf::circuit
