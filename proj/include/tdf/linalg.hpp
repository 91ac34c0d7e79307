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

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace tdf {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

inline constexpr double kPi = 3.14159265358979323846;

/// Largest absolute entry.
double max_abs(const CMatrix& m);

/// ‖U†U − I‖ in the max-entry norm.
double unitarity_defect(const CMatrix& m);

CMatrix kron(const CMatrix& a, const CMatrix& b);

/// a ⊗ a ⊗ ... (power copies). power == 0 gives the 1x1 identity.
CMatrix kron_power(const CMatrix& a, int power);

/// Nearest unitary in Frobenius norm (polar factor via SVD).
CMatrix polar_unitary(const CMatrix& m);

/// True iff dim is 2^k for some k >= 0; writes k.
bool is_power_of_two(Eigen::Index dim, int* log2 = nullptr);

namespace gates {
CMatrix hadamard();
CMatrix pauli(int index);  // 0 = I, 1 = X, 2 = Y, 3 = Z
CMatrix z_rotation(double angle);  // exp(-i angle Z / 2)
CMatrix cz();
}  // namespace gates

// Dense unitary with power-of-two dimension. The unitarity check happens at
// construction, so any Unitary in hand is unitary to within the tolerance it
// was built with.
class Unitary {
 public:
  static constexpr double kDefaultTolerance = 1e-10;

  Unitary() : matrix_(CMatrix::Identity(1, 1)) {}
  explicit Unitary(CMatrix matrix, double tolerance = kDefaultTolerance);

  static Unitary identity(Eigen::Index dim);

  const CMatrix& matrix() const { return matrix_; }
  Eigen::Index dim() const { return matrix_.rows(); }
  int num_qubits() const { return num_qubits_; }

  Unitary adjoint() const;
  Unitary operator*(const Unitary& rhs) const;

 private:
  CMatrix matrix_;
  int num_qubits_ = 0;
};

/// Embeds a 2^k-dim unitary on consecutive wires [first, first + k) of an
/// n-wire register. Wire 0 is the most significant tensor factor.
CMatrix embed_on_wires(const CMatrix& local, int first_wire, int num_wires);

}  // namespace tdf
