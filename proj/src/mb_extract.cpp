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

#include "tdf/mb_extract.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <sstream>

#include "tdf/circuit_route.hpp"
#include "tdf/errors.hpp"

namespace tdf {

// ---------------------------------------------------------------------------
// OutcomeString

OutcomeString OutcomeString::from_index(std::uint64_t index, int length) {
  if (length < 0 || length > 64) {
    throw ValidationError("outcome string length must be in 0..64");
  }
  OutcomeString m;
  m.bits.resize(length);
  for (int k = 0; k < length; ++k) {
    m.bits[k] = static_cast<std::uint8_t>((index >> (length - 1 - k)) & 1U);
  }
  return m;
}

OutcomeString OutcomeString::parse(const std::string& text) {
  OutcomeString m;
  for (char c : text) {
    if (c == '0' || c == '1') {
      m.bits.push_back(static_cast<std::uint8_t>(c - '0'));
    } else if (c != ',' && c != ' ' && c != '{' && c != '}' && c != '[' &&
               c != ']') {
      throw ValidationError(std::string("bad character in outcome string: ") + c);
    }
  }
  return m;
}

OutcomeString OutcomeString::random(Rng& rng, int length) {
  OutcomeString m;
  m.bits.resize(length);
  std::uint64_t word = 0;
  for (int k = 0; k < length; ++k) {
    if (k % 64 == 0) word = rng();
    m.bits[k] = static_cast<std::uint8_t>((word >> (k % 64)) & 1U);
  }
  return m;
}

std::uint64_t OutcomeString::to_index() const {
  std::uint64_t v = 0;
  for (std::uint8_t b : bits) v = (v << 1) | b;
  return v;
}

std::string OutcomeString::to_string() const {
  std::string s;
  for (std::uint8_t b : bits) s.push_back(static_cast<char>('0' + b));
  return s;
}

// ---------------------------------------------------------------------------
// Ensemble

Ensemble::Ensemble(std::vector<EnsembleEntry> entries)
    : entries_(std::move(entries)) {
  if (entries_.empty()) throw ValidationError("ensemble is empty");
  double total = 0;
  for (const auto& e : entries_) {
    if (!(e.probability > 0)) {
      throw ValidationError("ensemble probabilities must be positive");
    }
    if (e.unitary.dim() != entries_.front().unitary.dim()) {
      throw ValidationError("ensemble entries differ in dimension");
    }
    total += e.probability;
  }
  if (std::abs(total - 1.0) > kProbabilityTolerance) {
    std::ostringstream os;
    os << "ensemble probabilities sum to " << total;
    throw ValidationError(os.str());
  }
}

Ensemble Ensemble::uniform(std::vector<Unitary> unitaries) {
  std::vector<EnsembleEntry> entries;
  entries.reserve(unitaries.size());
  const double p = 1.0 / static_cast<double>(unitaries.size());
  for (auto& u : unitaries) entries.push_back({p, std::move(u)});
  return Ensemble(std::move(entries));
}

// ---------------------------------------------------------------------------
// Circuit route

namespace {

CMatrix circuit_matrix(const BrickLayout& layout, const OutcomeString& m) {
  const double s = 1.0 / std::sqrt(2.0);
  auto half_phases = [&layout](int row, int col) {
    const double a = layout.angle_table[row][col];
    return std::pair<Complex, Complex>(std::polar(1.0, -a / 2),
                                       std::polar(1.0, a / 2));
  };
  const std::vector<Complex> flat =
      circuit::brick_product<Complex>(layout, m.bits, half_phases, Complex(s));
  const Eigen::Index dim = Eigen::Index(1) << layout.rows;
  CMatrix u(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) u(r, c) = flat[r * dim + c];
  }
  return u;
}

}  // namespace

Unitary extract_unitary_circuit(const OpenGraph& g, const OutcomeString& m) {
  const auto layout = as_brick(g);
  if (!layout) {
    throw ValidationError(
        "circuit route needs a brick-shaped gadget; use the statevector route");
  }
  if (m.size() != g.num_measured()) {
    throw ValidationError("outcome string has " + std::to_string(m.size()) +
                          " bits, gadget measures " +
                          std::to_string(g.num_measured()));
  }
  return Unitary(circuit_matrix(*layout, m));
}

// ---------------------------------------------------------------------------
// Statevector route

namespace {

// State over the currently allocated vertices. live_[k] is stored in bit k of
// the amplitude index.
class LazyState {
 public:
  LazyState() : amp_(1, Complex(1)) {}

  int position(Vertex v) const {
    const auto it = std::find(live_.begin(), live_.end(), v);
    return it == live_.end() ? -1 : static_cast<int>(it - live_.begin());
  }

  void allocate(Vertex v, Complex c0, Complex c1) {
    const std::size_t n = amp_.size();
    amp_.resize(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      amp_[i + n] = amp_[i] * c1;
      amp_[i] *= c0;
    }
    live_.push_back(v);
  }

  void cz(int p, int q) {
    const std::size_t both = (std::size_t(1) << p) | (std::size_t(1) << q);
    for (std::size_t i = 0; i < amp_.size(); ++i) {
      if ((i & both) == both) amp_[i] = -amp_[i];
    }
  }

  // Contracts position p with the bra (w0, w1) and drops it.
  void project(int p, Complex w0, Complex w1) {
    const std::size_t mask = std::size_t(1) << p;
    const std::size_t low = mask - 1;
    std::vector<Complex> next(amp_.size() / 2);
    for (std::size_t i = 0; i < amp_.size(); ++i) {
      if (i & mask) continue;
      const std::size_t k = (i & low) | ((i >> 1) & ~low);
      next[k] = w0 * amp_[i] + w1 * amp_[i | mask];
    }
    amp_ = std::move(next);
    live_.erase(live_.begin() + p);
  }

  const std::vector<Vertex>& live() const { return live_; }
  const std::vector<Complex>& amplitudes() const { return amp_; }

 private:
  std::vector<Vertex> live_;
  std::vector<Complex> amp_;
};

// Measured vertices by BFS distance from the inputs, ties by vertex id. For
// bricks this is column-major order, which keeps the live front narrow.
std::vector<Vertex> measurement_order(const OpenGraph& g) {
  const auto adj = g.adjacency();
  std::vector<int> dist(g.num_vertices, std::numeric_limits<int>::max());
  std::deque<Vertex> queue;
  for (Vertex v : g.inputs) {
    dist[v] = 0;
    queue.push_back(v);
  }
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : adj[v]) {
      if (dist[w] == std::numeric_limits<int>::max()) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  std::vector<Vertex> order = g.measured();
  std::stable_sort(order.begin(), order.end(), [&dist](Vertex a, Vertex b) {
    return dist[a] < dist[b];
  });
  return order;
}

}  // namespace

ExtractedBranch extract_unitary_statevector(const OpenGraph& g,
                                            const OutcomeString& m) {
  g.validate();
  if (m.size() != g.num_measured()) {
    throw ValidationError("outcome string has " + std::to_string(m.size()) +
                          " bits, gadget measures " +
                          std::to_string(g.num_measured()));
  }
  const int width = g.width();
  if (width > 20) throw BudgetError("statevector route: logical width > 20");
  const Eigen::Index dim = Eigen::Index(1) << width;

  const std::vector<Vertex> measured = g.measured();
  std::vector<int> bit_of(g.num_vertices, -1);
  for (std::size_t k = 0; k < measured.size(); ++k) {
    bit_of[measured[k]] = static_cast<int>(k);
  }
  std::vector<int> input_wire(g.num_vertices, -1);
  for (int w = 0; w < width; ++w) input_wire[g.inputs[w]] = w;

  // Incident edge lists by edge index.
  std::vector<std::vector<int>> incident(g.num_vertices);
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    incident[g.edges[e].u].push_back(static_cast<int>(e));
    incident[g.edges[e].v].push_back(static_cast<int>(e));
  }
  const std::vector<Vertex> order = measurement_order(g);
  const Complex plus(1.0 / std::sqrt(2.0));
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

  CMatrix kraus(dim, dim);
  for (Eigen::Index input = 0; input < dim; ++input) {
    LazyState state;
    std::vector<bool> applied(g.edges.size(), false);
    auto ensure = [&](Vertex v) {
      if (state.position(v) >= 0) return;
      const int w = input_wire[v];
      if (w < 0) {
        state.allocate(v, plus, plus);
      } else {
        const bool one = (input >> (width - 1 - w)) & 1;
        state.allocate(v, one ? Complex(0) : Complex(1),
                       one ? Complex(1) : Complex(0));
      }
    };
    auto apply_edge = [&](int e) {
      if (applied[e]) return;
      ensure(g.edges[e].u);
      ensure(g.edges[e].v);
      state.cz(state.position(g.edges[e].u), state.position(g.edges[e].v));
      applied[e] = true;
    };
    // Inputs first so unmeasured passthrough wires exist even without edges.
    for (Vertex v : g.inputs) ensure(v);
    for (Vertex v : order) {
      ensure(v);
      for (int e : incident[v]) apply_edge(e);
      const double a = g.angles.at(v);
      const double sign = m.bits[bit_of[v]] ? -1.0 : 1.0;
      // Bra of (|0> + sign e^{-ia}|1>)/sqrt2.
      state.project(state.position(v), Complex(inv_sqrt2),
                    sign * inv_sqrt2 * std::polar(1.0, a));
    }
    for (Vertex v : g.outputs) ensure(v);
    for (std::size_t e = 0; e < g.edges.size(); ++e) apply_edge(static_cast<int>(e));

    std::vector<int> pos(width);
    for (int w = 0; w < width; ++w) pos[w] = state.position(g.outputs[w]);
    const auto& amp = state.amplitudes();
    for (std::size_t i = 0; i < amp.size(); ++i) {
      Eigen::Index out = 0;
      for (int w = 0; w < width; ++w) {
        out |= static_cast<Eigen::Index>((i >> pos[w]) & 1U) << (width - 1 - w);
      }
      kraus(out, input) = amp[i];
    }
  }

  const double probability = kraus.squaredNorm() / static_cast<double>(dim);
  if (probability < 1e-14) {
    throw DegenerateBranchError("outcome " + m.to_string() +
                                " has probability below 1e-14");
  }
  CMatrix u = kraus / std::sqrt(probability);
  const double defect = unitarity_defect(u);
  if (defect > 1e-8) {
    std::ostringstream os;
    os << "post-selected map is not unitary (defect " << defect
       << "); measurement conventions do not match this graph";
    throw ConventionMismatchError(os.str());
  }
  if (defect > 0) u = polar_unitary(u);
  return {Unitary(std::move(u)), probability};
}

Unitary extract_unitary(const OpenGraph& g, const OutcomeString& m) {
  if (as_brick(g)) return extract_unitary_circuit(g, m);
  return extract_unitary_statevector(g, m).unitary;
}

Ensemble enumerate_ensemble(const OpenGraph& g, int cap) {
  const int count = g.num_measured();
  if (count > cap) {
    throw BudgetError("enumeration of 2^" + std::to_string(count) +
                      " branches exceeds the cap 2^" + std::to_string(cap) +
                      "; use sampling or slice the brick");
  }
  const std::uint64_t n = std::uint64_t(1) << count;
  const double p = 1.0 / static_cast<double>(n);
  const bool brick = as_brick(g).has_value();
  std::vector<EnsembleEntry> entries(n, EnsembleEntry{p, Unitary()});
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
    const OutcomeString m = OutcomeString::from_index(i, count);
    entries[i].unitary = brick ? extract_unitary_circuit(g, m)
                               : extract_unitary_statevector(g, m).unitary;
  }
  return Ensemble(std::move(entries));
}

Unitary sample_unitary(const OpenGraph& g, std::uint64_t seed) {
  Rng rng = make_stream(seed, 0);
  return extract_unitary(g, OutcomeString::random(rng, g.num_measured()));
}

// ---------------------------------------------------------------------------
// Layered sampling

LayeredSampler::LayeredSampler(LayeredGadget gadget, int max_slice_measured)
    : gadget_(std::move(gadget)) {
  const auto layout = as_brick(gadget_.brick);
  if (!layout) throw ValidationError("layered sampler needs a brick-shaped brick");
  brick_rows_ = layout->rows;
  brick_bits_ = gadget_.brick.num_measured();
  slices_ = slice_brick(gadget_.brick, max_slice_measured);
  for (const OpenGraph& s : slices_) {
    const Ensemble e = enumerate_ensemble(s);
    std::vector<CMatrix> table;
    table.reserve(e.size());
    for (const auto& entry : e.entries()) table.push_back(entry.unitary.matrix());
    slice_tables_.push_back(std::move(table));
    slice_columns_.push_back(s.num_measured() / brick_rows_);
  }
}

CMatrix LayeredSampler::brick_matrix(const OutcomeString& bits) const {
  if (bits.size() != brick_bits_) {
    throw ValidationError("brick outcome string must have " +
                          std::to_string(brick_bits_) + " bits");
  }
  const int brick_columns = brick_bits_ / brick_rows_;
  CMatrix u = CMatrix::Identity(Eigen::Index(1) << brick_rows_,
                                Eigen::Index(1) << brick_rows_);
  int start = 0;
  for (std::size_t s = 0; s < slices_.size(); ++s) {
    const int cols = slice_columns_[s];
    std::uint64_t index = 0;
    for (int r = 0; r < brick_rows_; ++r) {
      for (int c = 0; c < cols; ++c) {
        index = (index << 1) | bits.bits[r * brick_columns + start + c];
      }
    }
    u = slice_tables_[s][index] * u;
    start += cols;
  }
  return u;
}

CMatrix LayeredSampler::layer_matrix(const std::vector<CMatrix>& bricks,
                                     bool odd) const {
  const auto& pairs = odd ? gadget_.odd_pairs : gadget_.even_pairs;
  if (bricks.size() != pairs.size()) {
    throw ValidationError("layer needs one brick unitary per pair");
  }
  CMatrix u = CMatrix::Identity(1, 1);
  int wire = 0;
  std::size_t p = 0;
  while (wire < gadget_.n) {
    if (p < pairs.size() && pairs[p].first == wire) {
      u = kron(u, bricks[p]);
      wire += 2;
      ++p;
    } else {
      u = kron(u, CMatrix::Identity(2, 2));
      wire += 1;
    }
  }
  return u;
}

LayeredSample LayeredSampler::sample(Rng& rng) const {
  LayeredSample out{Unitary(), {}, {}};
  std::vector<CMatrix> odd, even;
  for (std::size_t p = 0; p < gadget_.odd_pairs.size(); ++p) {
    out.odd_bricks.push_back(OutcomeString::random(rng, brick_bits_));
    odd.push_back(brick_matrix(out.odd_bricks.back()));
  }
  for (std::size_t p = 0; p < gadget_.even_pairs.size(); ++p) {
    out.even_bricks.push_back(OutcomeString::random(rng, brick_bits_));
    even.push_back(brick_matrix(out.even_bricks.back()));
  }
  out.unitary = Unitary(layer_matrix(even, false) * layer_matrix(odd, true));
  return out;
}

CMatrix LayeredSampler::sample_concatenated(Rng& rng, int repetitions) const {
  const Eigen::Index dim = Eigen::Index(1) << gadget_.n;
  CMatrix u = CMatrix::Identity(dim, dim);
  for (int k = 0; k < repetitions; ++k) {
    std::vector<CMatrix> odd, even;
    for (std::size_t p = 0; p < gadget_.odd_pairs.size(); ++p) {
      odd.push_back(brick_matrix(OutcomeString::random(rng, brick_bits_)));
    }
    for (std::size_t p = 0; p < gadget_.even_pairs.size(); ++p) {
      even.push_back(brick_matrix(OutcomeString::random(rng, brick_bits_)));
    }
    u = layer_matrix(even, false) * layer_matrix(odd, true) * u;
  }
  return u;
}

LayeredSample sample_unitary(const LayeredGadget& gadget, std::uint64_t seed) {
  LayeredSampler sampler(gadget);
  Rng rng = make_stream(seed, 0);
  return sampler.sample(rng);
}

}  // namespace tdf
