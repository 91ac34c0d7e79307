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
#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <numbers>

#include "tdf/design_metrics.hpp"
#include "tdf/errors.hpp"
#include "tdf/lie_universality.hpp"
#include "test_util.hpp"

using namespace tdf;

namespace {

std::vector<OutcomeString> reference_strings() {
  std::ifstream in(testing::data_path("reference_strings.txt"));
  std::vector<OutcomeString> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    out.push_back(OutcomeString::parse(line));
  }
  return out;
}

HermitianGenerator gen(const CMatrix& m) { return HermitianGenerator(m); }

}  // namespace

TEST_SUITE("lie_universality") {

TEST_CASE("principal log") {
  const HermitianGenerator zero = principal_log_hamiltonian(Unitary::identity(4));
  CHECK(max_abs(zero.matrix) < 1e-14);
  CHECK_FALSE(zero.branch_ambiguous);

  CMatrix d = CMatrix::Zero(2, 2);
  d(0, 0) = std::polar(1.0, 0.3);
  d(1, 1) = std::polar(1.0, -2.0);
  const HermitianGenerator h = principal_log_hamiltonian(Unitary(d));
  CHECK(h.matrix(0, 0).real() == doctest::Approx(0.3));
  CHECK(h.matrix(1, 1).real() == doctest::Approx(-2.0));

  Rng rng = make_stream(3, 0);
  for (int k = 0; k < 100; ++k) {
    const CMatrix u = haar_unitary(4, rng);
    const HermitianGenerator g = principal_log_hamiltonian(Unitary(u));
    CHECK(max_abs(g.matrix - g.matrix.adjoint()) < 1e-12);
    CHECK(max_abs(testing::hermitian_exp(g.matrix) - u) < 1e-10);
    Eigen::SelfAdjointEigenSolver<CMatrix> eig(g.matrix);
    CHECK(eig.eigenvalues().maxCoeff() <= std::numbers::pi + 1e-12);
    CHECK(eig.eigenvalues().minCoeff() > -std::numbers::pi);
  }

  const HermitianGenerator z = principal_log_hamiltonian(Unitary(gates::pauli(3)));
  CHECK(z.branch_ambiguous);
  CHECK(max_abs(testing::hermitian_exp(z.matrix) - gates::pauli(3)) < 1e-12);
}

TEST_CASE("commutator tower") {
  const CMatrix x1 = pauli_product(1, 0), y1 = pauli_product(2, 0);
  const CMatrix z1 = pauli_product(3, 0), x2 = pauli_product(0, 1);
  const auto tower = commutator_tower(gen(x1), gen(y1), gen(z1), gen(x2));
  REQUIRE(tower.size() == 16);
  CHECK(max_abs(tower[0].matrix - x1) == 0);
  CHECK(max_abs(tower[3].matrix - x2) == 0);
  // i[X1, Y1] = -2 Z1
  CHECK(max_abs(tower[4].matrix + 2 * z1) < 1e-14);
  // i[X1, X2] = 0
  CHECK(max_abs(tower[6].matrix) < 1e-14);
  for (const auto& g : tower) CHECK(max_abs(g.matrix - g.matrix.adjoint()) < 1e-14);
}

TEST_CASE("Pauli coefficients") {
  const PauliCoefficients a = pauli_coefficients(pauli_product(2, 3));
  for (int k = 0; k < 16; ++k) CHECK(a.coeffs[k] == doctest::Approx(k == 11 ? 1.0 : 0.0));

  Rng rng = make_stream(4, 0);
  const CMatrix u = haar_unitary(4, rng);
  const CMatrix h = u + u.adjoint();
  const CMatrix k = CMatrix(Complex(0, 1) * (u - u.adjoint()));
  const PauliCoefficients ph = pauli_coefficients(h), pk = pauli_coefficients(k);
  const PauliCoefficients sum = pauli_coefficients(CMatrix(2 * h + k));
  for (int i = 0; i < 16; ++i) {
    CHECK(sum.coeffs[i] == doctest::Approx(2 * ph.coeffs[i] + pk.coeffs[i]));
  }
  CHECK(max_abs(ph.reconstruct() - h) < 1e-12);
  CHECK_THROWS_AS(pauli_coefficients(CMatrix(Complex(0, 1) * h)), ValidationError);
}

TEST_CASE("spanning determinant") {
  std::vector<HermitianGenerator> paulis;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) paulis.push_back(gen(pauli_product(i, j)));
  const SpanningResult full = spanning_determinant(paulis);
  CHECK(std::abs(full.det) == doctest::Approx(1.0));
  CHECK(full.spans);

  std::vector<HermitianGenerator> shuffled = paulis;
  std::reverse(shuffled.begin(), shuffled.end());
  std::swap(shuffled[2], shuffled[9]);
  CHECK(std::abs(spanning_determinant(shuffled).det) == doctest::Approx(1.0));

  const std::vector<HermitianGenerator> copies(16, paulis[5]);
  const SpanningResult flat = spanning_determinant(copies);
  CHECK(std::abs(flat.det) < 1e-12);
  CHECK_FALSE(flat.spans);
}

TEST_CASE("pi fractions") {
  const auto q = snap_to_pi_fraction(std::numbers::pi / 4);
  REQUIRE(q);
  CHECK(q->first == 1);
  CHECK(q->second == 4);
  const auto neg = snap_to_pi_fraction(-std::numbers::pi / 2);
  REQUIRE(neg);
  CHECK(neg->first == -1);
  CHECK(neg->second == 2);
  const auto zero = snap_to_pi_fraction(0.0);
  REQUIRE(zero);
  CHECK(zero->first == 0);
  CHECK_FALSE(snap_to_pi_fraction(1.0));
}

TEST_CASE("extended-precision unitary matches the double one") {
  const OpenGraph b = presets::brick_b();
  Rng rng = make_stream(5, 0);
  for (int k = 0; k < 3; ++k) {
    const OutcomeString m = OutcomeString::random(rng, b.num_measured());
    const HpMatrix hp = gadget_unitary_hp(b, m);
    const CMatrix u = extract_unitary(b, m).matrix();
    REQUIRE(hp.dim == 4);
    double diff = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        const hp::Cplx& e = hp.entries[4 * i + j];
        const Complex z(static_cast<double>(e.real()), static_cast<double>(e.imag()));
        diff = std::max(diff, std::abs(z - u(i, j)));
      }
    CHECK(diff < 1e-12);
  }
}

TEST_CASE("eigenphase algebraicity") {
  const AlgebraicityReport pz = eigenphase_algebraicity(Unitary(pauli_product(3, 0)));
  CHECK(pz.any_monic);

  CMatrix d = CMatrix::Identity(4, 4);
  d(0, 0) = std::polar(1.0, 1.0);
  d(1, 1) = std::polar(1.0, -1.0);
  const AlgebraicityReport r = eigenphase_algebraicity(Unitary(d));
  // 2 cos(0) = 2 is monic
  CHECK(r.any_monic);
  bool found_free = false;
  for (const auto& e : r.eigenphases) found_free |= !e.polynomial.has_value();
  CHECK(found_free);
}

TEST_CASE("degenerate candidate sets") {
  const OpenGraph b = presets::brick_b();
  const Candidate c = candidates_from_strings(b, {OutcomeString::from_index(0, 24)}).front();
  CHECK_THROWS_AS(verify_universality({c, c, c, c}), DegenerateInputError);

  const auto strings = reference_strings();
  REQUIRE(strings.size() == 4);
  CHECK(strings[1] == strings[2]);
  CHECK_THROWS_AS(verify_universality(candidates_from_strings(b, strings)),
                  DegenerateInputError);
}

TEST_CASE("Clifford brick fails the algebraicity criterion") {
  const OpenGraph b = presets::brick_b_clifford();
  Rng rng = make_stream(6, 0);
  const auto strings = draw_distinct_strings(b, rng, 4);
  if (strings.size() < 4) {
    MESSAGE("fewer than four distinct Clifford unitaries drawn");
    return;
  }
  const UniversalityReport r = verify_universality(candidates_from_strings(b, strings));
  CHECK_FALSE(r.c2_pass);
  CHECK_FALSE(r.pass);
}

TEST_CASE("seeded search finds a universal quadruple") {
  const OpenGraph b = presets::brick_b();
  const SearchResult s = search_universal_candidates(b, 7);
  REQUIRE(s.report.pass);
  REQUIRE(s.strings.size() == 4);
  CHECK(s.report.c1_pass);
  CHECK(s.report.c2_pass);
  CHECK(std::abs(s.report.c1.det) > 1e-6);
  for (const auto& a : s.report.c2) CHECK_FALSE(a.any_monic);

  const UniversalityReport again = verify_universality(candidates_from_strings(b, s.strings));
  CHECK(again.pass);
  CHECK(again.c1.det == doctest::Approx(s.report.c1.det));

  UniversalityBounds untwisted;
  untwisted.c1_phase = 0;
  const UniversalityReport flat =
      verify_universality(candidates_from_strings(b, s.strings), untwisted);
  CHECK_FALSE(flat.c1_pass);
  CHECK(flat.c2_pass);
}

}  // TEST_SUITE
