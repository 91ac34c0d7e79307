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

#include "tdf/moment_ops.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "tdf/errors.hpp"
#include "tdf/kernels.hpp"
#include "tdf/rng.hpp"

namespace tdf {

namespace {

int log2_dim(Eigen::Index dim, const char* what) {
  int k = 0;
  if (!is_power_of_two(dim, &k)) {
    throw ValidationError(std::string(what) + ": dimension is not a power of two");
  }
  return k;
}

// Qubits per leg of a local moment matrix of the given size.
int local_wires(const CMatrix& local, int t) {
  const int bits = log2_dim(local.rows(), "local moment");
  if (local.rows() != local.cols() || bits % (2 * t) != 0) {
    throw ValidationError("local moment does not match t");
  }
  return bits / (2 * t);
}

void check_budget(Eigen::Index dim, const char* what) {
  if (dim > kDenseBudget) {
    std::ostringstream os;
    os << what << ": dimension " << dim << " exceeds the dense budget "
       << kDenseBudget << "; use the matrix-free path";
    throw BudgetError(os.str());
  }
}

CVector random_start(Eigen::Index dim, std::uint64_t seed) {
  Rng rng = make_stream(seed, 0);
  std::normal_distribution<double> normal;
  CVector v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) v(i) = Complex(normal(rng), normal(rng));
  return v / v.norm();
}

}  // namespace

Eigen::Index moment_dim(int n, int t) {
  if (n < 1 || t < 1) throw ValidationError("n and t must be positive");
  if (2 * n * t > 62) throw BudgetError("moment space too large");
  return Eigen::Index(1) << (2 * n * t);
}

// ---------------------------------------------------------------------------
// MomentOperator

MomentOperator MomentOperator::dense(int n, int t, CMatrix m) {
  MomentOperator op;
  op.kind_ = Kind::kDense;
  op.n_ = n;
  op.t_ = t;
  op.dim_ = moment_dim(n, t);
  if (m.rows() != op.dim_ || m.cols() != op.dim_) {
    throw ValidationError("dense moment operator has the wrong size");
  }
  op.matrix_ = std::make_shared<const CMatrix>(std::move(m));
  return op;
}

MomentOperator MomentOperator::ensemble(int n, int t, std::vector<EnsembleEntry> entries) {
  MomentOperator op;
  op.kind_ = Kind::kEnsemble;
  op.n_ = n;
  op.t_ = t;
  op.dim_ = moment_dim(n, t);
  for (const auto& e : entries) {
    if (e.unitary.num_qubits() != n) throw ValidationError("ensemble width mismatch");
  }
  op.entries_ = std::make_shared<const std::vector<EnsembleEntry>>(std::move(entries));
  return op;
}

MomentOperator MomentOperator::embedded(int n, int t, CMatrix local, int first_wire,
                                        int block_wires) {
  MomentOperator op;
  op.kind_ = Kind::kEmbedded;
  op.n_ = n;
  op.t_ = t;
  op.dim_ = moment_dim(n, t);
  if (local_wires(local, t) != block_wires) {
    throw ValidationError("local block size does not match its wire count");
  }
  if (first_wire < 0 || first_wire + block_wires > n) {
    throw ValidationError("local block wires out of range");
  }
  op.first_wire_ = first_wire;
  op.block_wires_ = block_wires;
  op.matrix_ = std::make_shared<const CMatrix>(std::move(local));
  return op;
}

MomentOperator MomentOperator::product(int n, int t, std::vector<MomentOperator> factors) {
  MomentOperator op;
  op.kind_ = Kind::kProduct;
  op.n_ = n;
  op.t_ = t;
  op.dim_ = moment_dim(n, t);
  for (const auto& f : factors) {
    if (f.dim() != op.dim_) throw ValidationError("product factors differ in dimension");
  }
  op.factors_ = std::move(factors);
  return op;
}

const CMatrix& MomentOperator::matrix() const {
  if (kind_ != Kind::kDense) throw Error("moment operator is not dense");
  return *matrix_;
}

CMatrix MomentOperator::to_dense() const {
  switch (kind_) {
    case Kind::kDense:
      return *matrix_;
    case Kind::kEnsemble: {
      check_budget(dim_, "moment operator");
      CMatrix acc = CMatrix::Zero(dim_, dim_);
      for (const auto& e : *entries_) {
        kernels::omp::accumulate_tensor_power(e.unitary.matrix(), t_, e.probability, acc);
      }
      return acc;
    }
    case Kind::kEmbedded:
      check_budget(dim_, "moment operator");
      return embed_local_dense(*matrix_, first_wire_, n_, t_);
    case Kind::kProduct: {
      check_budget(dim_, "moment operator");
      CMatrix acc = CMatrix::Identity(dim_, dim_);
      for (const auto& f : factors_) acc = (acc * f.to_dense()).eval();
      return acc;
    }
  }
  throw Error("unreachable");
}

CVector MomentOperator::apply(const CVector& x) const {
  switch (kind_) {
    case Kind::kDense:
      return *matrix_ * x;
    case Kind::kEnsemble: {
      CVector acc = CVector::Zero(dim_);
      CVector y;
      for (const auto& e : *entries_) {
        kernels::omp::apply_tensor_power(e.unitary.matrix(), t_, x, y);
        acc += e.probability * y;
      }
      return acc;
    }
    case Kind::kEmbedded: {
      CMatrix y;
      kernels::omp::apply_embedded_local(*matrix_, first_wire_, block_wires_, n_, t_,
                                         CMatrix(x), y);
      return y.col(0);
    }
    case Kind::kProduct: {
      CVector v = x;
      for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) v = it->apply(v);
      return v;
    }
  }
  throw Error("unreachable");
}

CVector MomentOperator::apply_adjoint(const CVector& x) const {
  switch (kind_) {
    case Kind::kDense:
      return matrix_->adjoint() * x;
    case Kind::kEnsemble: {
      CVector acc = CVector::Zero(dim_);
      CVector y;
      for (const auto& e : *entries_) {
        kernels::omp::apply_tensor_power(e.unitary.matrix().adjoint(), t_, x, y);
        acc += e.probability * y;
      }
      return acc;
    }
    case Kind::kEmbedded: {
      CMatrix y;
      kernels::omp::apply_embedded_local(matrix_->adjoint(), first_wire_, block_wires_,
                                         n_, t_, CMatrix(x), y);
      return y.col(0);
    }
    case Kind::kProduct: {
      CVector v = x;
      for (const auto& f : factors_) v = f.apply_adjoint(v);
      return v;
    }
  }
  throw Error("unreachable");
}

CMatrix dense_moment(const Ensemble& e, int t) {
  const int n = log2_dim(e.dim(), "ensemble");
  const Eigen::Index dim = moment_dim(n, t);
  check_budget(dim, "moment_superoperator");
  CMatrix acc = CMatrix::Zero(dim, dim);
  for (const auto& entry : e.entries()) {
    kernels::omp::accumulate_tensor_power(entry.unitary.matrix(), t, entry.probability, acc);
  }
  return acc;
}

CMatrix dense_moment_serial(const Ensemble& e, int t) {
  const int n = log2_dim(e.dim(), "ensemble");
  const Eigen::Index dim = moment_dim(n, t);
  check_budget(dim, "moment_superoperator");
  CMatrix acc = CMatrix::Zero(dim, dim);
  for (const auto& entry : e.entries()) {
    kernels::serial::accumulate_tensor_power(entry.unitary.matrix(), t, entry.probability, acc);
  }
  return acc;
}

MomentOperator moment_superoperator(const Ensemble& e, int t, bool allow_matrix_free) {
  const int n = log2_dim(e.dim(), "ensemble");
  const Eigen::Index dim = moment_dim(n, t);
  if (dim <= kDenseBudget) return MomentOperator::dense(n, t, dense_moment(e, t));
  if (!allow_matrix_free) check_budget(dim, "moment_superoperator");
  return MomentOperator::ensemble(n, t, e.entries());
}

CMatrix brick_moment(const OpenGraph& brick, int t, int max_slice_measured) {
  CMatrix m;
  for (const OpenGraph& slice : slice_brick(brick, max_slice_measured)) {
    const CMatrix s = dense_moment(enumerate_ensemble(slice), t);
    m = m.size() == 0 ? s : CMatrix(s * m);
  }
  return m;
}

// ---------------------------------------------------------------------------
// Haar projector

int count_cycles(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size(), false);
  int cycles = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = perm[j]) seen[j] = true;
  }
  return cycles;
}

HaarProjector::HaarProjector(Eigen::Index d, int t) : d_(d), t_(t) {
  if (d < 1 || t < 1 || t > 6) throw ValidationError("haar_projector needs d >= 1, 1 <= t <= 6");
  Eigen::Index dt = 1;
  for (int k = 0; k < t; ++k) dt *= d;
  dim_ = dt * dt;

  std::vector<int> p(t);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms_.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  // vec(W_pi) has a one at row (i_pi(0) .. i_pi(t-1)), column (i_0 .. i_{t-1}).
  std::vector<Eigen::Index> digits(t);
  for (const auto& perm : perms_) {
    std::vector<Eigen::Index> ones;
    ones.reserve(dt);
    for (Eigen::Index c = 0; c < dt; ++c) {
      Eigen::Index q = c;
      for (int k = t - 1; k >= 0; --k) {
        digits[k] = q % d;
        q /= d;
      }
      Eigen::Index r = 0;
      for (int k = 0; k < t; ++k) r = r * d + digits[perm[k]];
      ones.push_back(r * dt + c);
    }
    support_.push_back(std::move(ones));
  }

  const int m = static_cast<int>(perms_.size());
  gram_.resize(m, m);
  for (int a = 0; a < m; ++a) {
    std::vector<int> inv(t);
    for (int k = 0; k < t; ++k) inv[perms_[a][k]] = k;
    for (int b = 0; b < m; ++b) {
      std::vector<int> comp(t);
      for (int k = 0; k < t; ++k) comp[k] = inv[perms_[b][k]];
      gram_(a, b) = std::pow(static_cast<double>(d), count_cycles(comp));
    }
  }
  Eigen::SelfAdjointEigenSolver<RMatrix> eig(gram_);
  const RVector& ev = eig.eigenvalues();
  const double cutoff = 1e-10 * ev.cwiseAbs().maxCoeff();
  RVector inv = RVector::Zero(m);
  for (int k = 0; k < m; ++k) {
    if (ev(k) > cutoff) {
      inv(k) = 1.0 / ev(k);
      ++rank_;
    }
  }
  gram_pinv_ = eig.eigenvectors() * inv.asDiagonal() * eig.eigenvectors().transpose();
}

CVector HaarProjector::apply(const CVector& x) const {
  if (x.size() != dim_) throw ValidationError("haar projector: vector size mismatch");
  const Eigen::Index m = static_cast<Eigen::Index>(perms_.size());
  CVector overlaps(m);
  for (Eigen::Index a = 0; a < m; ++a) {
    Complex s = 0;
    for (Eigen::Index i : support_[a]) s += x(i);
    overlaps(a) = s;
  }
  const CVector coef = gram_pinv_.cast<Complex>() * overlaps;
  CVector out = CVector::Zero(dim_);
  for (Eigen::Index a = 0; a < m; ++a) {
    for (Eigen::Index i : support_[a]) out(i) += coef(a);
  }
  return out;
}

CMatrix HaarProjector::dense() const {
  check_budget(dim_, "haar projector");
  CMatrix p = CMatrix::Zero(dim_, dim_);
  const std::size_t m = perms_.size();
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      const double g = gram_pinv_(a, b);
      if (g == 0) continue;
      for (Eigen::Index r : support_[a]) {
        for (Eigen::Index c : support_[b]) p(r, c) += g;
      }
    }
  }
  return p;
}

RMatrix HaarProjector::basis() const {
  RMatrix v = RMatrix::Zero(dim_, static_cast<Eigen::Index>(perms_.size()));
  for (std::size_t a = 0; a < perms_.size(); ++a) {
    for (Eigen::Index i : support_[a]) v(i, a) = 1.0;
  }
  return v;
}

// ---------------------------------------------------------------------------
// Local projectors

CMatrix embed_local_dense(const CMatrix& local, int first_wire, int n, int t) {
  const int k = local_wires(local, t);
  const Eigen::Index dim = moment_dim(n, t);
  check_budget(dim, "embedded local moment");
  const kernels::EmbeddingOffsets off = kernels::embedding_offsets(first_wire, k, n, t);
  const Eigen::Index ld = local.rows();
  CMatrix out = CMatrix::Zero(dim, dim);
  for (Eigen::Index rest : off.rest_offsets) {
    for (Eigen::Index b = 0; b < ld; ++b) {
      const Eigen::Index col = off.local_offsets[b] + rest;
      for (Eigen::Index a = 0; a < ld; ++a) out(off.local_offsets[a] + rest, col) = local(a, b);
    }
  }
  return out;
}

MomentOperator local_projector(const CMatrix& local, int i, int n, int t) {
  if (i < 0 || i > n - 2) {
    throw ValidationError("local_projector: pair index " + std::to_string(i) +
                          " out of range for n = " + std::to_string(n));
  }
  if (local_wires(local, t) != 2) throw ValidationError("local moment must act on 2 qubits");
  if (moment_dim(n, t) <= kDenseBudget) {
    return MomentOperator::dense(n, t, embed_local_dense(local, i, n, t));
  }
  return MomentOperator::embedded(n, t, local, i, 2);
}

MomentOperator local_projector(const Ensemble& e2, int i, int n, int t) {
  if (e2.dim() != 4) throw ValidationError("local ensemble must be on 2 qubits");
  return local_projector(dense_moment(e2, t), i, n, t);
}

namespace {

MomentOperator layer_projector(const CMatrix& local, int n, int t, int first, bool dense) {
  if (n < 2) throw ValidationError("layer projector needs n >= 2");
  if (local_wires(local, t) != 2) throw ValidationError("local moment must act on 2 qubits");
  const Eigen::Index dim = moment_dim(n, t);
  std::vector<int> starts;
  for (int w = first; w + 1 < n; w += 2) starts.push_back(w);
  if (dense) {
    check_budget(dim, "layer projector");
    if (starts.empty()) return MomentOperator::dense(n, t, CMatrix::Identity(dim, dim));
    CMatrix m = embed_local_dense(local, starts[0], n, t);
    for (std::size_t k = 1; k < starts.size(); ++k) {
      CMatrix y;
      kernels::omp::apply_embedded_local(local, starts[k], 2, n, t, m, y);
      m = std::move(y);
    }
    return MomentOperator::dense(n, t, std::move(m));
  }
  std::vector<MomentOperator> factors;
  for (int w : starts) factors.push_back(MomentOperator::embedded(n, t, local, w, 2));
  return MomentOperator::product(n, t, std::move(factors));
}

}  // namespace

MomentOperator p_odd(const CMatrix& local, int n, int t, bool dense) {
  return layer_projector(local, n, t, 0, dense);
}

MomentOperator p_even(const CMatrix& local, int n, int t, bool dense) {
  return layer_projector(local, n, t, 1, dense);
}

CMatrix layered_moment(const CMatrix& local, int n, int t) {
  CMatrix m = p_odd(local, n, t).matrix();
  for (int w = 1; w + 1 < n; w += 2) {
    CMatrix y;
    kernels::omp::apply_embedded_local(local, w, 2, n, t, m, y);
    m = std::move(y);
  }
  return m;
}

MomentOperator layered_moment_operator(const CMatrix& local, int n, int t) {
  return MomentOperator::product(n, t, {p_even(local, n, t, false), p_odd(local, n, t, false)});
}

CMatrix layered_moment_direct(const LayeredGadget& g, int t) {
  const int n = g.n;
  const Eigen::Index dim = moment_dim(n, t);
  check_budget(dim, "layered moment");
  if (g.brick.width() != 2) throw ValidationError("layered gadget brick must be 2 wide");
  const std::vector<OpenGraph> slices = slice_brick(g.brick, 8);
  std::vector<Ensemble> slice_ensembles;
  for (const auto& s : slices) slice_ensembles.push_back(enumerate_ensemble(s));

  CMatrix m;
  for (const auto* pairs : {&g.odd_pairs, &g.even_pairs}) {
    for (const auto& pair : *pairs) {
      for (const Ensemble& e : slice_ensembles) {
        std::vector<EnsembleEntry> embedded;
        embedded.reserve(e.size());
        for (const auto& entry : e.entries()) {
          embedded.push_back(
              {entry.probability, Unitary(embed_on_wires(entry.unitary.matrix(), pair.first, n))});
        }
        CMatrix slot = dense_moment(Ensemble(std::move(embedded)), t);
        m = m.size() == 0 ? std::move(slot) : CMatrix(slot * m);
      }
    }
  }
  if (m.size() == 0) m = CMatrix::Identity(dim, dim);
  return m;
}

Lemma3Result lemma3_factorization(const LayeredGadget& g, int t) {
  Lemma3Result r;
  r.direct = layered_moment_direct(g, t);
  r.factored = layered_moment(brick_moment(g.brick, t), g.n, t);
  r.max_diff = max_abs(r.direct - r.factored);
  return r;
}

CMatrix glrc_hamiltonian(const CMatrix& local, int n, int t) {
  if (n < 2) throw ValidationError("glrc_hamiltonian needs n >= 2");
  const Eigen::Index dim = moment_dim(n, t);
  check_budget(dim, "glrc_hamiltonian");
  CMatrix h = static_cast<double>(n - 1) * CMatrix::Identity(dim, dim);
  for (int i = 0; i + 1 < n; ++i) h -= embed_local_dense(local, i, n, t);
  return h;
}

LinearMap glrc_hamiltonian_map(const CMatrix& local, int n, int t) {
  if (n < 2) throw ValidationError("glrc_hamiltonian needs n >= 2");
  if (local_wires(local, t) != 2) throw ValidationError("local moment must act on 2 qubits");
  auto shared = std::make_shared<const CMatrix>(local);
  return [shared, n, t](const CVector& x) {
    CVector out = static_cast<double>(n - 1) * x;
    for (int i = 0; i + 1 < n; ++i) {
      CMatrix y;
      kernels::omp::apply_embedded_local(*shared, i, 2, n, t, CMatrix(x), y);
      out -= y.col(0);
    }
    return out;
  };
}

// ---------------------------------------------------------------------------
// Spectra and norms

GapReport spectral_gap(const CMatrix& h) {
  if (max_abs(h - h.adjoint()) > 1e-8) {
    throw ValidationError("spectral_gap: operator is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(h, Eigen::EigenvaluesOnly);
  const RVector& ev = eig.eigenvalues();
  GapReport r;
  r.method = "dense-eigensolve";
  r.ground_energy = ev(0);
  int k = 0;
  while (k < ev.size() && ev(k) < 1e-8) {
    r.residual = std::max(r.residual, std::abs(ev(k)));
    ++k;
  }
  r.kernel_dim = k;
  r.gap = k < ev.size() ? ev(k) : 0.0;
  return r;
}

GapReport spectral_gap(const LinearMap& h, int n, int t, double c,
                       const SolverOptions& options) {
  const HaarProjector p0(Eigen::Index(1) << n, t);
  const Eigen::Index dim = p0.dim();
  CVector v = random_start(dim, options.seed);
  v -= p0.apply(v);
  v /= v.norm();
  double lambda = 0, previous = 0;
  GapReport r;
  r.method = "power-iteration";
  r.kernel_dim = p0.rank();
  for (int it = 1; it <= options.max_iterations; ++it) {
    CVector w = c * v - h(v);
    w -= p0.apply(w);
    lambda = v.dot(w).real();
    r.iterations = it;
    r.residual = (w - lambda * v).norm();
    const double norm = w.norm();
    if (norm == 0) break;
    v = w / norm;
    if (it > 1 && std::abs(lambda - previous) < options.tolerance * std::max(1.0, std::abs(lambda))) {
      r.gap = c - lambda;
      return r;
    }
    previous = lambda;
  }
  throw ConvergenceError("spectral_gap: power iteration hit the iteration cap", c - lambda);
}

NormReport operator_norm(const CMatrix& a) {
  NormReport r;
  if (a.rows() <= 256) {
    r.method = "dense-svd";
    r.value = Eigen::JacobiSVD<CMatrix>(a).singularValues()(0);
    return r;
  }
  r.method = "dense-gram-eig";
  const CMatrix g = a.adjoint() * a;
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(g, Eigen::EigenvaluesOnly);
  r.value = std::sqrt(std::max(0.0, eig.eigenvalues().maxCoeff()));
  return r;
}

NormReport operator_norm(const LinearMap& apply, const LinearMap& apply_adjoint,
                         Eigen::Index dim, const SolverOptions& options) {
  NormReport r;
  r.method = "power-iteration";
  CVector v = random_start(dim, options.seed);
  double lambda = 0, previous = 0;
  for (int it = 1; it <= options.max_iterations; ++it) {
    const CVector w = apply_adjoint(apply(v));
    lambda = v.dot(w).real();
    r.iterations = it;
    r.residual = (w - lambda * v).norm();
    const double norm = w.norm();
    if (norm == 0) {
      r.value = 0;
      return r;
    }
    v = w / norm;
    if (it > 1 && std::abs(lambda - previous) < options.tolerance * std::max(1e-300, std::abs(lambda))) {
      r.value = std::sqrt(std::max(0.0, lambda));
      return r;
    }
    previous = lambda;
  }
  throw ConvergenceError("operator_norm: power iteration hit the iteration cap",
                         std::sqrt(std::max(0.0, lambda)));
}

NormReport tpe_norm(const CMatrix& m, const HaarProjector& p0) {
  if (m.rows() != p0.dim()) throw ValidationError("tpe_norm: dimension mismatch");
  return operator_norm(m - p0.dense());
}

NormReport tpe_norm(const MomentOperator& m, const HaarProjector& p0,
                    const SolverOptions& options) {
  if (m.dim() != p0.dim()) throw ValidationError("tpe_norm: dimension mismatch");
  if (m.is_dense()) return tpe_norm(m.matrix(), p0);
  auto a = [&](const CVector& x) { return CVector(m.apply(x) - p0.apply(x)); };
  auto ah = [&](const CVector& x) { return CVector(m.apply_adjoint(x) - p0.apply(x)); };
  return operator_norm(a, ah, m.dim(), options);
}

DetectabilityResult detectability_check(const CMatrix& local, int n, int t) {
  DetectabilityResult r;
  const HaarProjector p0(Eigen::Index(1) << n, t);
  CMatrix product = layered_moment(local, n, t);
  r.lhs = tpe_norm(product, p0).value;
  product.resize(0, 0);
  r.gap = spectral_gap(glrc_hamiltonian(local, n, t)).gap;
  r.rhs = std::pow(1.0 + r.gap / 2.0, -1.0 / 3.0);
  r.holds = r.lhs <= r.rhs + 1e-9;
  return r;
}

// ---------------------------------------------------------------------------
// Gap bounds

double bound_exponent(LogConvention conv) {
  return conv == LogConvention::kNatural ? 3.1 / std::log(2.0) : 3.1 / std::log10(2.0);
}

double glrc_gap_bound(int t, double c, LogConvention conv) {
  if (t < 1) throw ValidationError("gap bound needs t >= 1");
  if (!(c > 0)) throw ValidationError("gap bound needs C > 0");
  // floor(log2(4t)) without floating point.
  int floor_log2 = 0;
  for (long v = 4L * t; v > 1; v >>= 1) ++floor_log2;
  const double tt = static_cast<double>(t);
  const double f = static_cast<double>(floor_log2);
  return 1.0 / (c * f * f * std::pow(tt, 5) * std::pow(tt, bound_exponent(conv)));
}

double lrc_gap_bound(int t, LogConvention conv) { return glrc_gap_bound(t, 1700.0, conv); }

}  // namespace tdf
