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

#include <array>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "tdf/graph_gadget.hpp"
#include "tdf/integer_relation.hpp"
#include "tdf/linalg.hpp"
#include "tdf/mb_extract.hpp"
#include "tdf/rng.hpp"

namespace tdf {

struct HermitianGenerator {
  CMatrix matrix;
  bool branch_ambiguous = false;  // an eigenvalue sat at -1; theta = pi taken

  HermitianGenerator() = default;
  explicit HermitianGenerator(CMatrix m, double tol = 1e-10);
};

/// H with exp(iH) = U, eigenphases in (-pi, pi].
HermitianGenerator principal_log_hamiltonian(const Unitary& u);

/// H1..H16: the four inputs, then i[H1,H2], i[H1,H3], i[H1,H4], i[H2,H3],
/// i[H2,H4], i[H2,H5], i[H2,H6], i[H3,H4], i[H3,H5], i[H3,H6], i[H4,H5],
/// i[H4,H6].
std::vector<HermitianGenerator> commutator_tower(const HermitianGenerator& h1,
                                                 const HermitianGenerator& h2,
                                                 const HermitianGenerator& h3,
                                                 const HermitianGenerator& h4);

CMatrix pauli_product(int i, int j);  // sigma_i (x) sigma_j

struct PauliCoefficients {
  std::array<double, 16> coeffs{};  // index 4 i + j
  double at(int i, int j) const { return coeffs[4 * i + j]; }
  CMatrix reconstruct() const;
};

/// a^{ij} = tr(H P_ij) / 4. Throws ValidationError if any coefficient has an
/// imaginary part above 1e-10.
PauliCoefficients pauli_coefficients(const CMatrix& h);

struct SpanningResult {
  double det = 0;  // of the column-normalised coefficient matrix
  bool spans = false;
  RMatrix coefficients;  // 16 x 16, column k = generator k, before normalising
};

SpanningResult spanning_determinant(const std::vector<HermitianGenerator>& gens,
                                    double threshold = 1e-6);

// Extended-precision 4 x 4 (or any power-of-two) matrix, row-major.
struct HpMatrix {
  int dim = 0;
  std::vector<hp::Cplx> entries;
};

/// The gadget unitary in extended precision. Angles within 1e-12 of a
/// rational multiple of pi (denominator <= 1024) are snapped to it.
HpMatrix gadget_unitary_hp(const OpenGraph& g, const OutcomeString& m);
HpMatrix promote(const CMatrix& u);

/// Rational multiple of pi, as (p, q) with a = p pi / q.
std::optional<std::pair<long, long>> snap_to_pi_fraction(double angle);

struct EigenphaseEntry {
  double theta = 0;
  std::string x;  // 2 cos(theta), 40 significant digits
  int multiplicity = 1;  // eigenvalues sharing this x
  std::optional<hp::IntegerPolynomial> polynomial;
  double residual_log10 = 0;
  bool monic = false;
};

struct AlgebraicityReport {
  std::vector<EigenphaseEntry> eigenphases;
  int max_degree = 8;
  double max_height = 1e6;
  int working_digits = hp::kDigits;
  bool any_monic = false;
};

inline constexpr int kDefaultMaxDegree = 8;
inline constexpr double kDefaultMaxHeight = 1e6;

/// Lattice search for the minimal polynomial of x = 2 cos(theta).
EigenphaseEntry analyze_eigenphase(const hp::Real& theta, int max_degree,
                                   double max_height);

/// Eigenvalues refined by Newton on the characteristic polynomial, then one
/// integer-relation search per distinct eigenvalue.
AlgebraicityReport eigenphase_algebraicity(const HpMatrix& u,
                                           int max_degree = kDefaultMaxDegree,
                                           double max_height = kDefaultMaxHeight);
/// Double input: entries are taken as exact binary values.
AlgebraicityReport eigenphase_algebraicity(const Unitary& u,
                                           int max_degree = kDefaultMaxDegree,
                                           double max_height = kDefaultMaxHeight);

/// Eigenvalues of an extended-precision matrix.
std::vector<hp::Cplx> hp_eigenvalues(const HpMatrix& u);

struct Candidate {
  Unitary unitary;
  std::optional<HpMatrix> exact;  // used for C2 when present
  std::string label;              // outcome string or user label
};

std::vector<Candidate> candidates_from_strings(const OpenGraph& g,
                                               const std::vector<OutcomeString>& strings);

struct UniversalityBounds {
  int max_degree = kDefaultMaxDegree;
  double max_height = kDefaultMaxHeight;
  double det_threshold = 1e-6;
  // C1 takes principal logs of exp(i c1_phase) U. Gadget unitaries lie in
  // SU(4), so at phase 0 the logs are traceless up to branch wraps and the
  // identity row of the coefficient matrix vanishes. Any phase off the
  // multiples of pi/2 gives every log a nonzero trace.
  double c1_phase = std::numbers::pi / 4;
};

struct UniversalityReport {
  std::vector<std::string> labels;
  SpanningResult c1;
  std::vector<AlgebraicityReport> c2;
  bool c1_pass = false;
  bool c2_pass = false;
  bool pass = false;
  std::vector<bool> branch_ambiguous;
  double c1_phase = 0;
  // Moment operators ignore det phases: max |U^{(x)t,t} - U'^{(x)t,t}| for
  // U' = U det(U)^{-1/4}, t = 1, 2, over the candidates.
  double su4_reduction_residual = 0;
};

/// C1 over the commutator tower of the principal logs, C2 per candidate.
/// Throws DegenerateInputError if two candidates are phase-equal.
UniversalityReport verify_universality(const std::vector<Candidate>& candidates,
                                       const UniversalityBounds& bounds = {});

/// Up to `count` outcome strings of `g` with pairwise phase-distinct
/// unitaries, drawn from `rng`.
std::vector<OutcomeString> draw_distinct_strings(const OpenGraph& g, Rng& rng, int count,
                                                int max_draws = 256);

struct SearchResult {
  UniversalityReport report;
  std::vector<OutcomeString> strings;
  int attempts = 0;
};

/// Seeded search over outcome strings of `g`: each drawn string whose
/// unitary passes C2 on its own joins a pool, and every new pool member is
/// tried for C1 against the earlier triples. `attempts` counts draws. If
/// nothing passes, the report of the last tried quadruple is returned.
SearchResult search_universal_candidates(const OpenGraph& g, std::uint64_t seed,
                                         int max_attempts = 400,
                                         const UniversalityBounds& bounds = {});

}  // namespace tdf
