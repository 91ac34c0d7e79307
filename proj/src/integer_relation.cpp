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


#include "tdf/integer_relation.hpp"

#include <cmath>
#include <sstream>

#include <boost/math/constants/constants.hpp>

#include "tdf/errors.hpp"

namespace tdf::hp {

Real pi() { return boost::math::constants::pi<Real>(); }

namespace {

Real to_real(const Integer& v) { return Real(v); }

Integer round_to_integer(const Real& v) {
  return static_cast<Integer>(boost::multiprecision::round(v));
}

}  // namespace

void lll_reduce(std::vector<std::vector<Integer>>& b, double delta) {
  const std::size_t n = b.size();
  if (n < 2) return;
  const std::size_t m = b[0].size();
  std::vector<std::vector<Real>> bstar(n, std::vector<Real>(m));
  std::vector<std::vector<Real>> mu(n, std::vector<Real>(n));
  std::vector<Real> norm2(n);

  auto gram_schmidt = [&]() {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < m; ++k) bstar[i][k] = to_real(b[i][k]);
      for (std::size_t j = 0; j < i; ++j) {
        Real dot = 0;
        for (std::size_t k = 0; k < m; ++k) dot += to_real(b[i][k]) * bstar[j][k];
        mu[i][j] = norm2[j] == 0 ? Real(0) : dot / norm2[j];
        for (std::size_t k = 0; k < m; ++k) bstar[i][k] -= mu[i][j] * bstar[j][k];
      }
      norm2[i] = 0;
      for (std::size_t k = 0; k < m; ++k) norm2[i] += bstar[i][k] * bstar[i][k];
    }
  };

  gram_schmidt();
  std::size_t k = 1;
  std::size_t guard = 0;
  while (k < n) {
    if (++guard > 100000) throw Error("LLL did not terminate");
    for (std::size_t jj = k; jj-- > 0;) {
      if (abs(mu[k][jj]) <= Real(1) / 2) continue;
      const Integer q = round_to_integer(mu[k][jj]);
      if (q != 0) {
        for (std::size_t c = 0; c < m; ++c) b[k][c] -= q * b[jj][c];
        const Real qr(q);
        for (std::size_t j = 0; j < jj; ++j) mu[k][j] -= qr * mu[jj][j];
        mu[k][jj] -= qr;
      }
    }
    if (norm2[k] >= (Real(delta) - mu[k][k - 1] * mu[k][k - 1]) * norm2[k - 1]) {
      ++k;
    } else {
      std::swap(b[k], b[k - 1]);
      gram_schmidt();
      k = k > 1 ? k - 1 : 1;
    }
  }
}

Integer IntegerPolynomial::height() const {
  Integer h = 0;
  for (const auto& c : coeffs) h = std::max(h, Integer(abs(c)));
  return h;
}

Real IntegerPolynomial::evaluate(const Real& x) const {
  Real v = 0;
  for (std::size_t k = coeffs.size(); k-- > 0;) v = v * x + to_real(coeffs[k]);
  return v;
}

std::string IntegerPolynomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    const Integer& c = coeffs[k];
    if (c == 0) continue;
    const Integer mag = abs(c);
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    if (mag != 1 || k == 0) os << mag;
    if (k > 0) os << "x";
    if (k > 1) os << "^" << k;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

RelationSearch find_minimal_polynomial(const Real& x, int max_degree,
                                       double max_height) {
  if (max_degree < 1) throw ValidationError("max_degree must be >= 1");
  if (!(max_height >= 1)) throw ValidationError("max_height must be >= 1");
  const double log_h = std::log10(max_height);
  // Scale so a relation within the bounds is far shorter than any spurious
  // lattice vector, then leave room for the acceptance threshold.
  const int scale = static_cast<int>(std::ceil((max_degree + 1) * log_h)) + 30;
  const int threshold = scale + 15;
  const double needed = threshold + log_h + max_degree * std::log10(4.0) + 10;
  if (needed > kDigits) {
    std::ostringstream os;
    os << "degree " << max_degree << " and height " << max_height << " need about "
       << static_cast<int>(needed) << " digits; working precision is " << kDigits;
    throw PrecisionError(os.str());
  }
  const Real ten_s = boost::multiprecision::pow(Real(10), scale);
  const Real accept = boost::multiprecision::pow(Real(10), -threshold);

  auto try_degree = [&](int degree) -> std::optional<IntegerPolynomial> {
    std::vector<std::vector<Integer>> basis(degree + 1,
                                            std::vector<Integer>(degree + 2, 0));
    Real power = 1;
    for (int k = 0; k <= degree; ++k) {
      basis[k][k] = 1;
      basis[k][degree + 1] = round_to_integer(ten_s * power);
      power *= x;
    }
    lll_reduce(basis);

    std::optional<IntegerPolynomial> best;
    for (const auto& row : basis) {
      IntegerPolynomial p;
      p.coeffs.assign(row.begin(), row.begin() + degree + 1);
      while (p.coeffs.size() > 1 && p.coeffs.back() == 0) p.coeffs.pop_back();
      if (p.coeffs.size() < 2) continue;
      if (Real(p.height()) > Real(max_height)) continue;
      if (abs(p.evaluate(x)) > accept) continue;
      if (!best || p.degree() < best->degree() ||
          (p.degree() == best->degree() && p.height() < best->height())) {
        best = p;
      }
    }
    return best;
  };

  RelationSearch out;
  out.scale_digits = scale;
  // A relation of lower degree is also a lattice vector at full degree, so a
  // miss there ends the search; a hit is then pinned to its minimal degree.
  std::optional<IntegerPolynomial> found = try_degree(max_degree);
  if (!found) return out;
  for (int degree = 1; degree < found->degree(); ++degree) {
    if (auto lower = try_degree(degree)) {
      found = lower;
      break;
    }
  }

  Integer g = 0;
  for (const auto& c : found->coeffs) g = gcd(g, Integer(abs(c)));
  for (auto& c : found->coeffs) c /= g;
  if (found->coeffs.back() < 0) {
    for (auto& c : found->coeffs) c = -c;
  }
  const Real r = abs(found->evaluate(x));
  out.residual_log10 =
      r == 0 ? -static_cast<double>(kDigits)
             : static_cast<double>(boost::multiprecision::log10(r));
  out.polynomial = std::move(found);
  return out;
}

}  // namespace tdf::hp
