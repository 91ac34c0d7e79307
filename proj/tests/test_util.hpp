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
#include <string>

#include "tdf/ensemble_algebra.hpp"
#include "tdf/linalg.hpp"

namespace tdf::testing {

inline CMatrix h_z(double angle, int m) {
  CMatrix u = gates::hadamard();
  if (m) u = u * gates::pauli(3);
  return u * gates::z_rotation(angle);
}

inline CMatrix hermitian_exp(const CMatrix& h) {
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(h);
  const Eigen::VectorXcd phases =
      (eig.eigenvalues().cast<Complex>() * Complex(0, 1)).array().exp().matrix();
  return eig.eigenvectors() * phases.asDiagonal() * eig.eigenvectors().adjoint();
}

inline std::string data_path(const std::string& name) {
  return std::string(TDF_TEST_DATA_DIR) + "/" + name;
}

}  // namespace tdf::testing
