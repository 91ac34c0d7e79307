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

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace tdf::hp {

inline constexpr int kDigits = 150;

using Real = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<kDigits>,
    boost::multiprecision::et_off>;
using Cplx = boost::multiprecision::number<
    boost::multiprecision::complex_adaptor<
        boost::multiprecision::cpp_bin_float<kDigits>>,
    boost::multiprecision::et_off>;
using Integer = boost::multiprecision::cpp_int;

Real pi();

/// LLL-reduces the rows of `basis` in place (delta = 0.99).
void lll_reduce(std::vector<std::vector<Integer>>& basis, double delta = 0.99);

struct IntegerPolynomial {
  std::vector<Integer> coeffs;  // coeffs[k] multiplies x^k
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool monic() const { return !coeffs.empty() && coeffs.back() == 1; }
  Integer height() const;
  Real evaluate(const Real& x) const;
  std::string to_string() const;
};

struct RelationSearch {
  std::optional<IntegerPolynomial> polynomial;
  int scale_digits = 0;   // lattice scaling 10^s
  double residual_log10 = 0;  // log10 |p(x)| of the accepted polynomial
};

/// Smallest-degree integer polynomial p with deg p <= max_degree, height <=
/// max_height and p(x) = 0 at working precision. Primitive, positive leading
/// coefficient. Throws PrecisionError when the bounds outrun kDigits.
RelationSearch find_minimal_polynomial(const Real& x, int max_degree,
                                       double max_height);

}  // namespace tdf::hp
