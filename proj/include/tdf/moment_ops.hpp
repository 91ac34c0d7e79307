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
#include <memory>
#include <string>
#include <vector>

#include "tdf/graph_gadget.hpp"
#include "tdf/linalg.hpp"
#include "tdf/mb_extract.hpp"

// Moment space of n qubits and t copies: vec of d^t x d^t operators, d = 2^n,
// row-major, so M vec(A) = vec(U^{(x)t} A U^{dagger (x)t}). See kernels.hpp
// for the bit layout.
namespace tdf {

inline constexpr Eigen::Index kDenseBudget = 4096;

Eigen::Index moment_dim(int n, int t);

// Dense matrix, or a matrix-free operator (ensemble sum, embedded local
// block, or product of factors).
class MomentOperator {
 public:
  enum class Kind { kDense, kEnsemble, kEmbedded, kProduct };

  static MomentOperator dense(int n, int t, CMatrix m);
  static MomentOperator ensemble(int n, int t, std::vector<EnsembleEntry> entries);
  /// `local` acts on wires [first_wire, first_wire + block_wires).
  static MomentOperator embedded(int n, int t, CMatrix local, int first_wire,
                                 int block_wires);
  /// factors[0] is applied last: product = factors[0] * factors[1] * ...
  static MomentOperator product(int n, int t, std::vector<MomentOperator> factors);

  Kind kind() const { return kind_; }
  bool is_dense() const { return kind_ == Kind::kDense; }
  int n() const { return n_; }
  int t() const { return t_; }
  Eigen::Index dim() const { return dim_; }

  /// Dense matrix; throws BudgetError above kDenseBudget for non-dense kinds.
  CMatrix to_dense() const;
  const CMatrix& matrix() const;  // kDense only

  CVector apply(const CVector& x) const;
  CVector apply_adjoint(const CVector& x) const;

 private:
  Kind kind_ = Kind::kDense;
  int n_ = 0;
  int t_ = 0;
  Eigen::Index dim_ = 0;
  std::shared_ptr<const CMatrix> matrix_;  // dense or local block
  std::shared_ptr<const std::vector<EnsembleEntry>> entries_;
  std::vector<MomentOperator> factors_;
  int first_wire_ = 0;
  int block_wires_ = 0;
};

/// Sum_i p_i U_i^{(x)t} (x) conj(U_i)^{(x)t}. Dense when dim <= kDenseBudget;
/// otherwise matrix-free if allowed, else BudgetError.
MomentOperator moment_superoperator(const Ensemble& e, int t,
                                    bool allow_matrix_free = false);
CMatrix dense_moment(const Ensemble& e, int t);
CMatrix dense_moment_serial(const Ensemble& e, int t);

/// Moment of a brick gadget, as the product of its column slices' moments
/// (slices from slice_brick; later slice on the left).
CMatrix brick_moment(const OpenGraph& brick, int t, int max_slice_measured = 8);

class HaarProjector {
 public:
  HaarProjector(Eigen::Index d, int t);

  Eigen::Index d() const { return d_; }
  int t() const { return t_; }
  Eigen::Index dim() const { return dim_; }
  int rank() const { return rank_; }
  double trace() const { return static_cast<double>(rank_); }

  const std::vector<std::vector<int>>& permutations() const { return perms_; }
  /// d^{cycles(pi^-1 sigma)}
  const RMatrix& gram() const { return gram_; }
  const RMatrix& gram_pinv() const { return gram_pinv_; }
  /// Positions of the ones in vec(W_pi).
  const std::vector<Eigen::Index>& support(std::size_t perm) const { return support_[perm]; }

  CVector apply(const CVector& x) const;
  CMatrix dense() const;
  /// Columns vec(W_pi) as a dense dim x t! matrix.
  RMatrix basis() const;

 private:
  Eigen::Index d_;
  int t_;
  Eigen::Index dim_;
  int rank_ = 0;
  std::vector<std::vector<int>> perms_;
  std::vector<std::vector<Eigen::Index>> support_;
  RMatrix gram_;
  RMatrix gram_pinv_;
};

int count_cycles(const std::vector<int>& perm);

/// Local moment embedded on wires (i, i+1), 0-based i.
MomentOperator local_projector(const CMatrix& local_moment, int i, int n, int t);
MomentOperator local_projector(const Ensemble& e2, int i, int n, int t);

/// Dense embedding of a local moment on wires [first, first + k).
CMatrix embed_local_dense(const CMatrix& local_moment, int first_wire, int n, int t);

/// Product over the odd pairs (0,1),(2,3),... / even pairs (1,2),(3,4),...
MomentOperator p_odd(const CMatrix& local_moment, int n, int t, bool dense = true);
MomentOperator p_even(const CMatrix& local_moment, int n, int t, bool dense = true);

/// P_even P_odd from a 2-qubit local moment, dense: P_odd is built, then
/// the even pairs are applied through the embedded kernel.
CMatrix layered_moment(const CMatrix& local_moment, int n, int t);
/// Same product without materialising it.
MomentOperator layered_moment_operator(const CMatrix& local_moment, int n, int t);

struct Lemma3Result {
  CMatrix direct;
  CMatrix factored;
  double max_diff = 0;
};

/// Moment of the layered gadget's ensemble, built as the time-ordered product
/// of full n-qubit moments of each embedded sub-gadget slice.
CMatrix layered_moment_direct(const LayeredGadget& g, int t);

/// direct vs P_even P_odd from the brick's 2-qubit moment. Dense only.
Lemma3Result lemma3_factorization(const LayeredGadget& g, int t);

using LinearMap = std::function<CVector(const CVector&)>;

/// sum_i (I - P'_{i,i+1}); dense.
CMatrix glrc_hamiltonian(const CMatrix& local_moment, int n, int t);
/// Matrix-free application of the same operator.
LinearMap glrc_hamiltonian_map(const CMatrix& local_moment, int n, int t);

struct GapReport {
  double gap = 0;
  std::string method;  // "dense-eigensolve" | "power-iteration"
  double residual = 0;
  int iterations = 0;
  int kernel_dim = 0;
  double ground_energy = 0;
};

struct SolverOptions {
  double tolerance = 1e-9;
  int max_iterations = 100000;
  std::uint64_t seed = 12345;
};

/// Dense eigensolve; the zero space is the eigenvalues below 1e-8.
GapReport spectral_gap(const CMatrix& h);
/// Deflated power iteration on (c I - H) with the Haar space of (n, t)
/// projected out; c must bound the spectrum of H from above.
GapReport spectral_gap(const LinearMap& h, int n, int t, double spectrum_upper_bound,
                       const SolverOptions& options = {});

struct NormReport {
  double value = 0;
  std::string method;  // "dense-svd" | "dense-gram-eig" | "power-iteration"
  int iterations = 0;
  double residual = 0;
};

/// Largest singular value of a (dense) matrix.
NormReport operator_norm(const CMatrix& a);
/// Power iteration on A^dagger A for matrix-free A.
NormReport operator_norm(const LinearMap& apply, const LinearMap& apply_adjoint,
                         Eigen::Index dim, const SolverOptions& options = {});

/// ||M - P0||_inf.
NormReport tpe_norm(const MomentOperator& m, const HaarProjector& p0,
                    const SolverOptions& options = {});
NormReport tpe_norm(const CMatrix& m, const HaarProjector& p0);

struct DetectabilityResult {
  double lhs = 0;
  double rhs = 0;
  double gap = 0;
  bool holds = false;
};

DetectabilityResult detectability_check(const CMatrix& local_moment, int n, int t);

enum class LogConvention { kNatural, kBase10 };

/// exponent of t in the bound: 3.1 / log(2)
double bound_exponent(LogConvention conv);
double lrc_gap_bound(int t, LogConvention conv = LogConvention::kNatural);
double glrc_gap_bound(int t, double c, LogConvention conv = LogConvention::kNatural);

}  // namespace tdf
