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


#include "tdf/design_metrics.hpp"

#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include "tdf/errors.hpp"

namespace tdf {

CMatrix haar_unitary(Eigen::Index d, Rng& rng) {
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  CMatrix z(d, d);
  for (Eigen::Index c = 0; c < d; ++c) {
    for (Eigen::Index r = 0; r < d; ++r) z(r, c) = Complex(normal(rng), normal(rng));
  }
  Eigen::HouseholderQR<CMatrix> qr(z);
  CMatrix q = qr.householderQ();
  const CMatrix& r = qr.matrixQR();
  for (Eigen::Index k = 0; k < d; ++k) {
    const Complex diag = r(k, k);
    q.col(k) *= std::abs(diag) > 0 ? diag / std::abs(diag) : Complex(1);
  }
  return q;
}

namespace {

struct BatchStats {
  double mean = 0;
  double std_error = 0;
};

BatchStats batch_means(const std::vector<double>& x) {
  BatchStats s;
  const std::size_t n = x.size();
  if (n == 0) return s;
  double total = 0;
  for (double v : x) total += v;
  s.mean = total / static_cast<double>(n);
  const std::size_t batches = std::min<std::size_t>(kFrameBatches, n);
  std::vector<double> means(batches, 0);
  for (std::size_t b = 0; b < batches; ++b) {
    const std::size_t lo = b * n / batches, hi = (b + 1) * n / batches;
    double acc = 0;
    for (std::size_t i = lo; i < hi; ++i) acc += x[i];
    means[b] = acc / static_cast<double>(hi - lo);
  }
  if (batches < 2) return s;
  double m = 0;
  for (double v : means) m += v;
  m /= static_cast<double>(batches);
  double var = 0;
  for (double v : means) var += (v - m) * (v - m);
  var /= static_cast<double>(batches - 1);
  s.std_error = std::sqrt(var / static_cast<double>(batches));
  return s;
}

std::vector<double> pair_values(const UnitarySampler& sampler, int t, int samples,
                                std::uint64_t seed) {
  std::vector<double> values(samples);
#pragma omp parallel for schedule(static)
  for (int k = 0; k < samples; ++k) {
    Rng rng = make_stream(seed, static_cast<std::uint64_t>(k));
    const CMatrix u = sampler(rng);
    const CMatrix v = sampler(rng);
    const double a = std::abs(u.conjugate().cwiseProduct(v).sum());
    values[k] = std::pow(a, 2 * t);
  }
  return values;
}

double factorial(int t) {
  double f = 1;
  for (int k = 2; k <= t; ++k) f *= k;
  return f;
}

}  // namespace

FramePotentialEstimate frame_potential(const UnitarySampler& sampler, Eigen::Index d,
                                       int t, int num_samples, std::uint64_t seed,
                                       bool with_haar_reference) {
  if (t < 1) throw ValidationError("frame_potential needs t >= 1");
  if (num_samples < 1) throw ValidationError("frame_potential needs samples >= 1");
  FramePotentialEstimate out;
  out.t = t;
  out.num_samples = num_samples;
  const BatchStats s = batch_means(pair_values(sampler, t, num_samples, seed));
  out.estimate = s.mean;
  out.std_error = s.std_error;
  if (with_haar_reference) {
    const UnitarySampler haar = [d](Rng& rng) { return haar_unitary(d, rng); };
    const BatchStats h = batch_means(pair_values(haar, t, num_samples, stream_seed(seed, ~0ULL)));
    out.haar_reference = h.mean;
    out.haar_std_error = h.std_error;
  }
  if (t <= d) out.haar_exact = factorial(t);
  return out;
}

double frame_potential_exact(const Ensemble& e, int t) {
  double total = 0;
  for (const auto& a : e.entries()) {
    for (const auto& b : e.entries()) {
      const double tr = std::abs(a.unitary.matrix().conjugate().cwiseProduct(b.unitary.matrix()).sum());
      total += a.probability * b.probability * std::pow(tr, 2 * t);
    }
  }
  return total;
}

namespace {

// Guards the ceiling against values a few ulps above an integer.
long ceil_guarded(double x) {
  return static_cast<long>(std::ceil(x - 1e-9 * std::max(1.0, std::abs(x))));
}

}  // namespace

KBoundReport theorem1_k(double eta, Eigen::Index d, int t, double epsilon) {
  if (!(eta > 0) || !(eta < 1)) {
    throw PreconditionError("theorem1_k needs 0 < eta < 1 (TPE condition)");
  }
  if (!(epsilon > 0)) throw ValidationError("theorem1_k needs epsilon > 0");
  if (d < 2 || t < 1) throw ValidationError("theorem1_k needs d >= 2, t >= 1");
  KBoundReport r;
  int n = 0;
  r.n = is_power_of_two(d, &n) ? n : 0;
  r.t = t;
  r.epsilon = epsilon;
  r.eta = eta;
  r.raw = (t * std::log(static_cast<double>(d)) - std::log(epsilon)) / -std::log(eta);
  r.k_required = std::max(1L, ceil_guarded(r.raw));
  return r;
}

int theorem3_min_n(int t) {
  if (t < 1) throw ValidationError("t must be >= 1");
  return static_cast<int>(std::floor(2.5 * std::log2(4.0 * t) + 1e-12));
}

KBoundReport theorem3_k(int n, int t, double epsilon, double c, LogConvention conv) {
  if (!(epsilon > 0)) throw ValidationError("theorem3_k needs epsilon > 0");
  const int min_n = theorem3_min_n(t);
  if (n < min_n) {
    throw PreconditionError("theorem3_k needs n >= floor(2.5 log2(4t)) = " +
                            std::to_string(min_n) + ", got n = " + std::to_string(n));
  }
  KBoundReport r;
  r.n = n;
  r.t = t;
  r.epsilon = epsilon;
  r.c = c;
  const double p = glrc_gap_bound(t, c, conv);
  const double log2_term = std::log1p(p / 2.0) / std::log(2.0);
  r.raw = 3.0 / log2_term * (static_cast<double>(n) * t + std::log2(1.0 / epsilon));
  r.k_required = std::max(1L, ceil_guarded(r.raw));
  return r;
}

std::vector<ScanPoint> concatenation_scan_tpe(const CMatrix& m, const HaarProjector& p0,
                                              int k_max) {
  if (k_max < 1) throw ValidationError("k_max must be >= 1");
  std::vector<ScanPoint> out;
  CMatrix power = m;
  double g1 = 0;
  for (int k = 1; k <= k_max; ++k) {
    if (k > 1) power = (power * m).eval();
    ScanPoint p;
    p.k = k;
    p.value = tpe_norm(power, p0).value;
    if (k == 1) g1 = p.value;
    p.power_prediction = std::pow(g1, k);
    out.push_back(p);
  }
  return out;
}

double subdominant_radius(const CMatrix& m, const HaarProjector& p0) {
  const CMatrix a = m - p0.dense();
  return Eigen::ComplexEigenSolver<CMatrix>(a, false).eigenvalues().cwiseAbs().maxCoeff();
}

std::vector<ScanPoint> concatenation_scan_frame(const LayeredSampler& sampler, int t,
                                                const std::vector<int>& ks,
                                                int samples, std::uint64_t seed) {
  const Eigen::Index d = Eigen::Index(1) << sampler.gadget().n;
  std::vector<ScanPoint> out;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    const int k = ks[i];
    if (k < 0) throw ValidationError("concatenation depth must be >= 0");
    ScanPoint p;
    p.k = k;
    if (k == 0) {
      p.value = std::pow(static_cast<double>(d), 2 * t);
    } else {
      const UnitarySampler draw = [&sampler, k](Rng& rng) {
        return sampler.sample_concatenated(rng, k);
      };
      const FramePotentialEstimate f =
          frame_potential(draw, d, t, samples, stream_seed(seed, k), true);
      p.value = f.estimate;
      p.std_error = f.std_error;
      p.haar_reference = f.haar_reference;
      p.haar_std_error = f.haar_std_error;
    }
    out.push_back(p);
  }
  return out;
}

}  // namespace tdf
