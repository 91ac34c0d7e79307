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


#include "tdf/ensemble_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "tdf/errors.hpp"

namespace tdf {

bool equal_up_to_phase(const CMatrix& u, const CMatrix& v, double tol) {
  if (u.rows() != v.rows() || u.cols() != v.cols()) {
    throw ValidationError("equal_up_to_phase: dimension mismatch");
  }
  const double d = static_cast<double>(u.rows());
  return std::abs((u.adjoint() * v).trace()) >= d * (1.0 - tol);
}

bool equal_up_to_phase(const Unitary& u, const Unitary& v, double tol) {
  return equal_up_to_phase(u.matrix(), v.matrix(), tol);
}

double phase_identity_residual(const CMatrix& m) {
  const Complex tr = m.trace();
  const Complex phase = std::abs(tr) > 0 ? tr / std::abs(tr) : Complex(1);
  const CMatrix diff =
      m - phase * CMatrix::Identity(m.rows(), m.cols());
  return max_abs(diff);
}

InverseClosureReport inverse_closed(const Ensemble& e, double tol) {
  const std::size_t n = e.size();
  std::vector<CMatrix> mats;
  mats.reserve(n);
  for (const auto& entry : e.entries()) mats.push_back(entry.unitary.matrix());
  const double d = static_cast<double>(e.dim());

  std::vector<long> partner(n, -1);
  std::vector<double> residual(n, 0);
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // tr(U_i U_j) has modulus d exactly when U_j is U_i^dagger up to phase.
      const Complex tr = (mats[i].transpose().cwiseProduct(mats[j])).sum();
      if (std::abs(tr) >= d * (1.0 - tol)) {
        partner[i] = static_cast<long>(j);
        residual[i] = phase_identity_residual(mats[i] * mats[j]);
        break;
      }
    }
  }

  InverseClosureReport report;
  for (std::size_t i = 0; i < n; ++i) {
    if (partner[i] < 0) {
      report.unmatched.push_back(i);
      continue;
    }
    report.witness_pairs.push_back({i, static_cast<std::size_t>(partner[i]), residual[i]});
    report.max_residual = std::max(report.max_residual, residual[i]);
  }
  report.closed = report.unmatched.empty() && report.max_residual <= tol;
  return report;
}

Ensemble dedup_up_to_phase(const Ensemble& e, double tol) {
  std::vector<EnsembleEntry> out;
  for (const auto& entry : e.entries()) {
    auto it = std::find_if(out.begin(), out.end(), [&](const EnsembleEntry& rep) {
      return equal_up_to_phase(rep.unitary, entry.unitary, tol);
    });
    if (it == out.end()) {
      out.push_back(entry);
    } else {
      it->probability += entry.probability;
    }
  }
  return Ensemble(std::move(out));
}

UniformityReport check_uniform(const Ensemble& e, double tol) {
  UniformityReport r;
  r.expected = 1.0 / static_cast<double>(e.size());
  for (const auto& entry : e.entries()) {
    r.max_deviation = std::max(r.max_deviation, std::abs(entry.probability - r.expected));
  }
  r.uniform = r.max_deviation <= tol;
  return r;
}

}  // namespace tdf
