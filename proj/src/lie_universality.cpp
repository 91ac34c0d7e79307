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

#include "tdf/lie_universality.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "tdf/circuit_route.hpp"
#include "tdf/ensemble_algebra.hpp"
#include "tdf/errors.hpp"
#include "tdf/rng.hpp"

namespace tdf {

using hp::Cplx;
using hp::Real;

HermitianGenerator::HermitianGenerator(CMatrix m, double tol)
    : matrix(std::move(m)) {
  if (matrix.rows() != matrix.cols()) {
    throw ValidationError("generator must be square");
  }
  const double defect = max_abs(matrix - matrix.adjoint());
  if (defect > tol) {
    std::ostringstream os;
    os << "generator is not Hermitian (defect " << defect << ")";
    throw ValidationError(os.str());
  }
}

HermitianGenerator principal_log_hamiltonian(const Unitary& u) {
  Eigen::ComplexSchur<CMatrix> schur(u.matrix());
  const CMatrix& q = schur.matrixU();
  const CMatrix& t = schur.matrixT();
  RVector theta(t.rows());
  bool ambiguous = false;
  for (Eigen::Index k = 0; k < t.rows(); ++k) {
    const Complex lambda = t(k, k);
    double phase = std::arg(lambda);
    if (std::abs(lambda + 1.0) < 1e-12) {
      ambiguous = true;
      phase = kPi;
    }
    if (phase <= -kPi) phase = kPi;
    theta(k) = phase;
  }
  CMatrix h = q * theta.cast<Complex>().asDiagonal() * q.adjoint();
  h = 0.5 * (h + h.adjoint()).eval();
  HermitianGenerator g(std::move(h));
  g.branch_ambiguous = ambiguous;
  return g;
}

std::vector<HermitianGenerator> commutator_tower(const HermitianGenerator& h1,
                                                 const HermitianGenerator& h2,
                                                 const HermitianGenerator& h3,
                                                 const HermitianGenerator& h4) {
  std::vector<CMatrix> h = {h1.matrix, h2.matrix, h3.matrix, h4.matrix};
  auto comm = [&h](int a, int b) {
    const CMatrix& x = h[a - 1];
    const CMatrix& y = h[b - 1];
    return CMatrix(Complex(0, 1) * (x * y - y * x));
  };
  // 1-based pairs for H5..H16.
  constexpr int pairs[12][2] = {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {2, 5},
                                {2, 6}, {3, 4}, {3, 5}, {3, 6}, {4, 5}, {4, 6}};
  for (const auto& p : pairs) h.push_back(comm(p[0], p[1]));
  std::vector<HermitianGenerator> out;
  out.reserve(16);
  for (CMatrix& m : h) out.emplace_back(std::move(m), 1e-9);
  return out;
}

CMatrix pauli_product(int i, int j) { return kron(gates::pauli(i), gates::pauli(j)); }

CMatrix PauliCoefficients::reconstruct() const {
  CMatrix h = CMatrix::Zero(4, 4);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) h += at(i, j) * pauli_product(i, j);
  }
  return h;
}

PauliCoefficients pauli_coefficients(const CMatrix& h) {
  if (h.rows() != 4 || h.cols() != 4) {
    throw ValidationError("pauli_coefficients expects a 4 x 4 matrix");
  }
  PauliCoefficients out;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const Complex a = (h * pauli_product(i, j)).trace() / 4.0;
      if (std::abs(a.imag()) > 1e-10) {
        throw ValidationError("pauli_coefficients: input is not Hermitian");
      }
      out.coeffs[4 * i + j] = a.real();
    }
  }
  return out;
}

SpanningResult spanning_determinant(const std::vector<HermitianGenerator>& gens,
                                    double threshold) {
  if (gens.size() != 16) {
    throw ValidationError("spanning_determinant needs 16 generators");
  }
  SpanningResult r;
  r.coefficients.resize(16, 16);
  for (int k = 0; k < 16; ++k) {
    const PauliCoefficients c = pauli_coefficients(gens[k].matrix);
    for (int q = 0; q < 16; ++q) r.coefficients(q, k) = c.coeffs[q];
  }
  RMatrix normalised = r.coefficients;
  for (int k = 0; k < 16; ++k) {
    const double norm = normalised.col(k).norm();
    if (norm > 0) normalised.col(k) /= norm;
  }
  r.det = normalised.fullPivLu().determinant();
  r.spans = std::abs(r.det) > threshold;
  return r;
}

// ---------------------------------------------------------------------------
// Extended precision

std::optional<std::pair<long, long>> snap_to_pi_fraction(double angle) {
  for (long q = 1; q <= 1024; ++q) {
    const double p = std::round(angle * q / kPi);
    if (std::abs(angle - p * kPi / q) <= 1e-12 * std::max(1.0, std::abs(angle))) {
      return std::make_pair(static_cast<long>(p), q);
    }
  }
  return std::nullopt;
}

namespace {

Real exact_angle(double angle) {
  if (const auto f = snap_to_pi_fraction(angle)) {
    return hp::pi() * Real(f->first) / Real(f->second);
  }
  return Real(angle);
}

}  // namespace

HpMatrix gadget_unitary_hp(const OpenGraph& g, const OutcomeString& m) {
  const auto layout = as_brick(g);
  if (!layout) {
    throw ValidationError("extended-precision route needs a brick-shaped gadget");
  }
  auto half_phases = [&layout](int row, int col) {
    const Real half = exact_angle(layout->angle_table[row][col]) / 2;
    const Real c = cos(half), s = sin(half);
    return std::pair<Cplx, Cplx>(Cplx(c, Real(-s)), Cplx(c, s));
  };
  const Cplx inv_sqrt2(Real(1) / sqrt(Real(2)));
  HpMatrix out;
  out.dim = 1 << layout->rows;
  out.entries = circuit::brick_product<Cplx>(*layout, m.bits, half_phases, inv_sqrt2);
  return out;
}

HpMatrix promote(const CMatrix& u) {
  HpMatrix out;
  out.dim = static_cast<int>(u.rows());
  for (Eigen::Index r = 0; r < u.rows(); ++r) {
    for (Eigen::Index c = 0; c < u.cols(); ++c) {
      out.entries.emplace_back(Real(u(r, c).real()), Real(u(r, c).imag()));
    }
  }
  return out;
}

namespace {

using HpPoly = std::vector<Cplx>;  // coefficient of z^k at index k

// det(zI - A) by Faddeev-LeVerrier.
HpPoly characteristic_polynomial(const HpMatrix& a) {
  const int n = a.dim;
  auto at = [n](const std::vector<Cplx>& m, int r, int c) -> const Cplx& {
    return m[r * n + c];
  };
  HpPoly c(n + 1, Cplx(0));
  c[n] = Cplx(1);
  std::vector<Cplx> m(n * n, Cplx(0));
  for (int k = 1; k <= n; ++k) {
    std::vector<Cplx> am(n * n, Cplx(0));
    for (int r = 0; r < n; ++r) {
      for (int q = 0; q < n; ++q) {
        Cplx s(0);
        for (int j = 0; j < n; ++j) s += at(a.entries, r, j) * at(m, j, q);
        am[r * n + q] = s;
      }
    }
    for (int r = 0; r < n; ++r) am[r * n + r] += c[n - k + 1];
    m = std::move(am);
    Cplx tr(0);
    for (int r = 0; r < n; ++r) {
      for (int j = 0; j < n; ++j) tr += at(a.entries, r, j) * at(m, j, r);
    }
    c[n - k] = -tr / Cplx(Real(k));
  }
  return c;
}

HpPoly derivative(const HpPoly& p) {
  HpPoly d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * Cplx(Real(k)));
  if (d.empty()) d.push_back(Cplx(0));
  return d;
}

Cplx evaluate(const HpPoly& p, const Cplx& z) {
  Cplx v(0);
  for (std::size_t k = p.size(); k-- > 0;) v = v * z + p[k];
  return v;
}

Cplx newton(const HpPoly& p, Cplx z, int max_iterations) {
  const HpPoly dp = derivative(p);
  const Real stop = boost::multiprecision::pow(Real(10), -(hp::kDigits - 8));
  for (int it = 0; it < max_iterations; ++it) {
    const Cplx d = evaluate(dp, z);
    if (abs(d) == 0) break;
    const Cplx step = evaluate(p, z) / d;
    z -= step;
    if (abs(step) < stop) break;
  }
  return z;
}

Real log10_abs(const Cplx& z) {
  const Real a = abs(z);
  return a == 0 ? Real(-hp::kDigits) : boost::multiprecision::log10(a);
}

}  // namespace

std::vector<Cplx> hp_eigenvalues(const HpMatrix& u) {
  const int n = u.dim;
  CMatrix approx(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      const Cplx& z = u.entries[r * n + c];
      approx(r, c) = Complex(static_cast<double>(real(z)), static_cast<double>(imag(z)));
    }
  }
  const CVector guess = Eigen::ComplexEigenSolver<CMatrix>(approx, false).eigenvalues();
  const HpPoly p = characteristic_polynomial(u);

  std::vector<Cplx> roots;
  std::vector<bool> used(n, false);
  for (int i = 0; i < n; ++i) {
    if (used[i]) continue;
    std::vector<int> cluster;
    Complex mean = 0;
    for (int j = i; j < n; ++j) {
      if (!used[j] && std::abs(guess(j) - guess(i)) < 1e-5) {
        cluster.push_back(j);
        mean += guess(j);
        used[j] = true;
      }
    }
    const int mult = static_cast<int>(cluster.size());
    mean /= static_cast<double>(mult);
    HpPoly q = p;
    for (int k = 1; k < mult; ++k) q = derivative(q);
    const Cplx z = newton(q, Cplx(Real(mean.real()), Real(mean.imag())), 400);
    // Accept the cluster as a multiple root only if the lower derivatives
    // vanish to match; otherwise refine members one by one.
    bool multiple = true;
    HpPoly r = p;
    for (int k = 0; k < mult - 1 && multiple; ++k) {
      const Real bound = Real(-(hp::kDigits - 30) * (mult - k) / mult);
      if (log10_abs(evaluate(r, z)) > bound) multiple = false;
      r = derivative(r);
    }
    if (multiple) {
      for (int k = 0; k < mult; ++k) roots.push_back(z);
    } else {
      for (int j : cluster) {
        roots.push_back(newton(p, Cplx(Real(guess(j).real()), Real(guess(j).imag())), 5000));
      }
    }
  }
  return roots;
}

namespace {

EigenphaseEntry analyze_x(const Real& x, double theta, int max_degree,
                          double max_height) {
  EigenphaseEntry e;
  e.theta = theta;
  e.x = x.str(40);
  const hp::RelationSearch s = hp::find_minimal_polynomial(x, max_degree, max_height);
  if (s.polynomial) {
    e.polynomial = s.polynomial;
    e.monic = s.polynomial->monic();
    e.residual_log10 = s.residual_log10;
  }
  return e;
}

}  // namespace

EigenphaseEntry analyze_eigenphase(const Real& theta, int max_degree,
                                   double max_height) {
  return analyze_x(2 * cos(theta), static_cast<double>(theta), max_degree, max_height);
}

AlgebraicityReport eigenphase_algebraicity(const HpMatrix& u, int max_degree,
                                           double max_height) {
  AlgebraicityReport report;
  report.max_degree = max_degree;
  report.max_height = max_height;
  const std::vector<Cplx> roots = hp_eigenvalues(u);
  const Real same = boost::multiprecision::pow(Real(10), -(hp::kDigits - 30));
  std::vector<Real> seen;
  for (const Cplx& lambda : roots) {
    const Real theta = atan2(imag(lambda), real(lambda));
    const Real x = 2 * real(lambda) / abs(lambda);
    const auto it = std::find_if(seen.begin(), seen.end(),
                                 [&](const Real& y) { return abs(y - x) < same; });
    if (it != seen.end()) {
      // Conjugate or repeated eigenvalue: same x, same analysis.
      ++report.eigenphases[it - seen.begin()].multiplicity;
      continue;
    }
    seen.push_back(x);
    report.eigenphases.push_back(
        analyze_x(x, static_cast<double>(theta), max_degree, max_height));
    report.any_monic = report.any_monic || report.eigenphases.back().monic;
  }
  return report;
}

AlgebraicityReport eigenphase_algebraicity(const Unitary& u, int max_degree,
                                           double max_height) {
  return eigenphase_algebraicity(promote(u.matrix()), max_degree, max_height);
}

// ---------------------------------------------------------------------------
// Verification

std::vector<Candidate> candidates_from_strings(const OpenGraph& g,
                                               const std::vector<OutcomeString>& strings) {
  std::vector<Candidate> out;
  for (const auto& m : strings) {
    Candidate c{extract_unitary(g, m), std::nullopt, m.to_string()};
    if (as_brick(g)) c.exact = gadget_unitary_hp(g, m);
    out.push_back(std::move(c));
  }
  return out;
}

namespace {

double su4_residual(const CMatrix& u) {
  const Complex det = u.determinant();
  const CMatrix v = u * std::pow(det, -1.0 / static_cast<double>(u.rows()));
  double worst = 0;
  for (int t = 1; t <= 2; ++t) {
    const CMatrix a = kron_power(u, t);
    const CMatrix b = kron_power(v, t);
    worst = std::max(worst, max_abs(kron(a, a.conjugate()) - kron(b, b.conjugate())));
  }
  return worst;
}

UniversalityReport run_c1(const std::vector<Candidate>& c,
                          const UniversalityBounds& bounds) {
  if (c.size() != 4) throw ValidationError("universality check needs 4 candidates");
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].unitary.dim() != 4) throw ValidationError("candidates must be 4 x 4");
    for (std::size_t j = 0; j < i; ++j) {
      if (equal_up_to_phase(c[i].unitary, c[j].unitary)) {
        throw DegenerateInputError("candidates " + std::to_string(j) + " and " +
                                   std::to_string(i) + " are equal up to phase");
      }
    }
  }
  UniversalityReport r;
  r.c1_phase = bounds.c1_phase;
  const Complex gauge = std::polar(1.0, bounds.c1_phase);
  std::vector<HermitianGenerator> h;
  for (const auto& cand : c) {
    r.labels.push_back(cand.label);
    h.push_back(principal_log_hamiltonian(Unitary(cand.unitary.matrix() * gauge)));
    r.branch_ambiguous.push_back(h.back().branch_ambiguous);
    r.su4_reduction_residual =
        std::max(r.su4_reduction_residual, su4_residual(cand.unitary.matrix()));
  }
  r.c1 = spanning_determinant(commutator_tower(h[0], h[1], h[2], h[3]),
                              bounds.det_threshold);
  r.c1_pass = r.c1.spans;
  return r;
}

void run_c2(const std::vector<Candidate>& c, const UniversalityBounds& bounds,
            UniversalityReport& r) {
  r.c2.clear();
  r.c2_pass = true;
  for (const auto& cand : c) {
    const HpMatrix m = cand.exact ? *cand.exact : promote(cand.unitary.matrix());
    r.c2.push_back(eigenphase_algebraicity(m, bounds.max_degree, bounds.max_height));
    if (r.c2.back().any_monic) r.c2_pass = false;
  }
  r.pass = r.c1_pass && r.c2_pass;
}

}  // namespace

UniversalityReport verify_universality(const std::vector<Candidate>& candidates,
                                       const UniversalityBounds& bounds) {
  UniversalityReport r = run_c1(candidates, bounds);
  run_c2(candidates, bounds, r);
  return r;
}

std::vector<OutcomeString> draw_distinct_strings(const OpenGraph& g, Rng& rng, int count,
                                                int max_draws) {
  std::vector<OutcomeString> strings;
  std::vector<Unitary> unitaries;
  for (int draw = 0; draw < max_draws && static_cast<int>(strings.size()) < count; ++draw) {
    OutcomeString m = OutcomeString::random(rng, g.num_measured());
    Unitary u = extract_unitary(g, m);
    const bool repeat = std::any_of(unitaries.begin(), unitaries.end(),
                                    [&u](const Unitary& v) { return equal_up_to_phase(u, v); });
    if (repeat) continue;
    strings.push_back(std::move(m));
    unitaries.push_back(std::move(u));
  }
  return strings;
}

SearchResult search_universal_candidates(const OpenGraph& g, std::uint64_t seed,
                                         int max_attempts,
                                         const UniversalityBounds& bounds) {
  if (g.width() != 2) throw ValidationError("universality search needs a 2-qubit gadget");
  Rng rng = make_stream(seed, 0);
  SearchResult out;
  std::vector<OutcomeString> pool_strings;
  std::vector<Candidate> pool;
  std::vector<AlgebraicityReport> pool_c2;
  for (int draw = 1; draw <= max_attempts; ++draw) {
    out.attempts = draw;
    OutcomeString m = OutcomeString::random(rng, g.num_measured());
    Candidate cand = candidates_from_strings(g, {m}).front();
    const bool repeat = std::any_of(pool.begin(), pool.end(), [&cand](const Candidate& p) {
      return equal_up_to_phase(p.unitary, cand.unitary);
    });
    if (repeat) continue;
    const HpMatrix exact = cand.exact ? *cand.exact : promote(cand.unitary.matrix());
    AlgebraicityReport c2 =
        eigenphase_algebraicity(exact, bounds.max_degree, bounds.max_height);
    if (c2.any_monic) continue;
    pool_strings.push_back(std::move(m));
    pool.push_back(std::move(cand));
    pool_c2.push_back(std::move(c2));

    const std::size_t k = pool.size() - 1;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        for (std::size_t l = j + 1; l < k; ++l) {
          UniversalityReport r = run_c1({pool[i], pool[j], pool[l], pool[k]}, bounds);
          r.c2 = {pool_c2[i], pool_c2[j], pool_c2[l], pool_c2[k]};
          r.c2_pass = true;
          r.pass = r.c1_pass;
          out.strings = {pool_strings[i], pool_strings[j], pool_strings[l], pool_strings[k]};
          out.report = std::move(r);
          if (out.report.pass) return out;
        }
      }
    }
  }
  return out;
}

}  // namespace tdf
