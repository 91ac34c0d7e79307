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

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "tdf/linalg.hpp"
#include "tdf/mb_extract.hpp"
#include "tdf/moment_ops.hpp"
#include "tdf/rng.hpp"

namespace tdf {

using UnitarySampler = std::function<CMatrix(Rng&)>;

/// Haar-random d x d unitary: QR of a complex Ginibre matrix with the phases
/// of diag(R) moved into Q.
CMatrix haar_unitary(Eigen::Index d, Rng& rng);

inline constexpr int kFrameBatches = 30;

struct FramePotentialEstimate {
  int t = 0;
  int num_samples = 0;
  double estimate = 0;
  double std_error = 0;  // batch means over kFrameBatches batches
  double haar_reference = 0;  // from the Haar sampling oracle
  double haar_std_error = 0;
  std::optional<double> haar_exact;  // t! when t <= d
};

/// Mean of |tr(U^dagger V)|^{2t} over `num_samples` independent pairs. Pair
/// k draws from its own stream of `seed`.
FramePotentialEstimate frame_potential(const UnitarySampler& sampler, Eigen::Index d,
                                       int t, int num_samples, std::uint64_t seed,
                                       bool with_haar_reference = true);

/// sum_ij p_i p_j |tr(U_i^dagger U_j)|^{2t}.
double frame_potential_exact(const Ensemble& e, int t);

struct KBoundReport {
  int n = 0;
  int t = 0;
  double epsilon = 0;
  std::optional<double> eta;
  std::optional<double> c;
  double raw = 0;  // the bound before rounding up
  long k_required = 1;
};

/// ceil(log(d^t / eps) / log(1 / eta)), at least 1.
KBoundReport theorem1_k(double eta, Eigen::Index d, int t, double epsilon);

/// floor(2.5 log2(4t))
int theorem3_min_n(int t);

/// ceil(3 / log2(1 + P/2) (n t + log2(1/eps))) with P = glrc_gap_bound(t, C).
/// Throws PreconditionError when n < theorem3_min_n(t).
KBoundReport theorem3_k(int n, int t, double epsilon, double c,
                        LogConvention conv = LogConvention::kNatural);

struct ScanPoint {
  int k = 0;
  double value = 0;
  double std_error = 0;         // frame path only
  double power_prediction = 0;  // tpe path: g_1^k
  double haar_reference = 0;    // frame path
  double haar_std_error = 0;
};

/// g_k = ||M^k - P0|| for k = 1..k_max, dense.
std::vector<ScanPoint> concatenation_scan_tpe(const CMatrix& m, const HaarProjector& p0,
                                              int k_max);

/// Spectral radius of M - P0 (dense eigenvalues).
double subdominant_radius(const CMatrix& m, const HaarProjector& p0);

/// Frame potentials of the k-fold concatenation for each k in `ks`.
std::vector<ScanPoint> concatenation_scan_frame(const LayeredSampler& sampler, int t,
                                                const std::vector<int>& ks,
                                                int samples, std::uint64_t seed);

}  // namespace tdf
