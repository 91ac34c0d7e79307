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
#include <vector>

#include "tdf/linalg.hpp"
#include "tdf/mb_extract.hpp"

namespace tdf {

inline constexpr double kPhaseTolerance = 1e-9;

/// |tr(U^dagger V)| >= d (1 - tol).
bool equal_up_to_phase(const CMatrix& u, const CMatrix& v,
                       double tol = kPhaseTolerance);
bool equal_up_to_phase(const Unitary& u, const Unitary& v,
                       double tol = kPhaseTolerance);

/// min over phases of ||M - e^{i phi} I||_max, phase taken from the trace.
double phase_identity_residual(const CMatrix& m);

struct InverseWitness {
  std::size_t i;
  std::size_t j;
  double residual;
};

struct InverseClosureReport {
  bool closed = false;
  std::vector<InverseWitness> witness_pairs;  // one per i that has a partner
  std::vector<std::size_t> unmatched;
  double max_residual = 0;
};

InverseClosureReport inverse_closed(const Ensemble& e, double tol = kPhaseTolerance);

/// Merges phase-equal entries, keeping the first representative.
Ensemble dedup_up_to_phase(const Ensemble& e, double tol = kPhaseTolerance);

struct UniformityReport {
  bool uniform = false;
  double expected = 0;
  double max_deviation = 0;
};

UniformityReport check_uniform(const Ensemble& e, double tol = 1e-10);

}  // namespace tdf
