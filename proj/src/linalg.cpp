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

#include "tdf/linalg.hpp"

#include <cmath>
#include <sstream>

#include "tdf/errors.hpp"

namespace tdf {

double max_abs(const CMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double unitarity_defect(const CMatrix& m) {
  if (m.rows() != m.cols()) return INFINITY;
  return max_abs(m.adjoint() * m - CMatrix::Identity(m.rows(), m.cols()));
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

CMatrix kron_power(const CMatrix& a, int power) {
  CMatrix out = CMatrix::Identity(1, 1);
  for (int k = 0; k < power; ++k) out = kron(out, a);
  return out;
}

CMatrix polar_unitary(const CMatrix& m) {
  Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

bool is_power_of_two(Eigen::Index dim, int* log2) {
  if (dim < 1) return false;
  int k = 0;
  Eigen::Index v = dim;
  while (v > 1) {
    if (v & 1) return false;
    v >>= 1;
    ++k;
  }
  if (log2 != nullptr) *log2 = k;
  return true;
}

namespace gates {

CMatrix hadamard() {
  const double s = 1.0 / std::sqrt(2.0);
  CMatrix h(2, 2);
  h << s, s, s, -s;
  return h;
}

CMatrix pauli(int index) {
  CMatrix p = CMatrix::Zero(2, 2);
  switch (index) {
    case 0:
      p(0, 0) = 1.0;
      p(1, 1) = 1.0;
      break;
    case 1:
      p(0, 1) = 1.0;
      p(1, 0) = 1.0;
      break;
    case 2:
      p(0, 1) = Complex(0, -1);
      p(1, 0) = Complex(0, 1);
      break;
    case 3:
      p(0, 0) = 1.0;
      p(1, 1) = -1.0;
      break;
    default:
      throw ValidationError("pauli index must be in 0..3");
  }
  return p;
}

CMatrix z_rotation(double angle) {
  CMatrix z = CMatrix::Zero(2, 2);
  z(0, 0) = std::polar(1.0, -angle / 2);
  z(1, 1) = std::polar(1.0, angle / 2);
  return z;
}

CMatrix cz() {
  CMatrix c = CMatrix::Identity(4, 4);
  c(3, 3) = -1.0;
  return c;
}

}  // namespace gates

Unitary::Unitary(CMatrix matrix, double tolerance) : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols() ||
      !is_power_of_two(matrix_.rows(), &num_qubits_)) {
    std::ostringstream os;
    os << "unitary must be square with power-of-two dimension, got "
       << matrix_.rows() << "x" << matrix_.cols();
    throw ValidationError(os.str());
  }
  const double defect = unitarity_defect(matrix_);
  if (!(defect <= tolerance)) {
    std::ostringstream os;
    os << "matrix is not unitary: max|U'U - I| = " << defect;
    throw ValidationError(os.str());
  }
}

Unitary Unitary::identity(Eigen::Index dim) {
  return Unitary(CMatrix::Identity(dim, dim));
}

Unitary Unitary::adjoint() const {
  Unitary u;
  u.matrix_ = matrix_.adjoint();
  u.num_qubits_ = num_qubits_;
  return u;
}

Unitary Unitary::operator*(const Unitary& rhs) const {
  if (dim() != rhs.dim()) throw ValidationError("unitary dimension mismatch");
  Unitary u;
  u.matrix_ = matrix_ * rhs.matrix_;
  u.num_qubits_ = num_qubits_;
  return u;
}

CMatrix embed_on_wires(const CMatrix& local, int first_wire, int num_wires) {
  int k = 0;
  if (!is_power_of_two(local.rows(), &k) || first_wire < 0 ||
      first_wire + k > num_wires) {
    throw ValidationError("embed_on_wires: wire range out of bounds");
  }
  const Eigen::Index left = Eigen::Index(1) << first_wire;
  const Eigen::Index right = Eigen::Index(1) << (num_wires - first_wire - k);
  return kron(kron(CMatrix::Identity(left, left), local),
              CMatrix::Identity(right, right));
}

}  // namespace tdf
