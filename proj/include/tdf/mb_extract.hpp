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
#include <string>
#include <vector>

#include "tdf/graph_gadget.hpp"
#include "tdf/linalg.hpp"
#include "tdf/rng.hpp"

namespace tdf {

// Measurement outcomes of a gadget, one bit per measured vertex in ascending
// vertex order. Bit value 0 is the "+" outcome.
struct OutcomeString {
  std::vector<std::uint8_t> bits;

  /// Lexicographic: bit 0 is the most significant bit of `index`.
  static OutcomeString from_index(std::uint64_t index, int length);
  static OutcomeString parse(const std::string& text);  // "0110..." or "0,1,1,0,..."
  static OutcomeString random(Rng& rng, int length);

  std::uint64_t to_index() const;
  int size() const { return static_cast<int>(bits.size()); }
  std::string to_string() const;

  friend bool operator==(const OutcomeString&, const OutcomeString&) = default;
};

struct EnsembleEntry {
  double probability;
  Unitary unitary;
};

// Finite weighted set of unitaries of one dimension. Probabilities are
// positive and sum to 1 within 1e-12.
class Ensemble {
 public:
  static constexpr double kProbabilityTolerance = 1e-12;

  explicit Ensemble(std::vector<EnsembleEntry> entries);
  static Ensemble uniform(std::vector<Unitary> unitaries);

  const std::vector<EnsembleEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  Eigen::Index dim() const { return entries_.front().unitary.dim(); }
  const EnsembleEntry& operator[](std::size_t i) const { return entries_[i]; }

 private:
  std::vector<EnsembleEntry> entries_;
};

/// Column-ordered gate product: for every column, CZs on that column's
/// vertical edges, then H Z^m Z(angle) on each measured wire. Requires a
/// brick-shaped gadget (see as_brick).
Unitary extract_unitary_circuit(const OpenGraph& g, const OutcomeString& m);

struct ExtractedBranch {
  Unitary unitary;
  double probability;
};

/// Independent route: prepares the open graph state for each logical basis
/// input, projects the measured vertices onto (|0> + (-1)^m e^{-i angle}|1>)
/// / sqrt(2), and reads off the induced logical map. Qubits are allocated
/// lazily and released once measured, so any gadget whose measurement front
/// stays small is tractable regardless of its total vertex count.
ExtractedBranch extract_unitary_statevector(const OpenGraph& g,
                                            const OutcomeString& m);

/// Circuit route when the gadget is brick shaped, statevector otherwise.
Unitary extract_unitary(const OpenGraph& g, const OutcomeString& m);

inline constexpr int kEnumerationCap = 20;

/// All 2^M outcome branches, lexicographic, probability 2^-M each.
Ensemble enumerate_ensemble(const OpenGraph& g, int cap = kEnumerationCap);

/// Fair independent bits drawn from `seed`; deterministic.
Unitary sample_unitary(const OpenGraph& g, std::uint64_t seed);

struct LayeredSample {
  Unitary unitary;
  std::vector<OutcomeString> odd_bricks;   // one per odd pair, in wire order
  std::vector<OutcomeString> even_bricks;  // one per even pair, in wire order
};

// Samples the layered gadget. The brick ensemble is never enumerated: the
// brick is cut into column slices (<= 8 measured vertices each by default),
// each slice is enumerated once, and a brick branch is the product of slice
// branches, which is exact because outcome bits are independent.
class LayeredSampler {
 public:
  explicit LayeredSampler(LayeredGadget gadget, int max_slice_measured = 8);

  const LayeredGadget& gadget() const { return gadget_; }
  int brick_bits() const { return brick_bits_; }
  const std::vector<OpenGraph>& slices() const { return slices_; }

  CMatrix brick_matrix(const OutcomeString& brick_bits) const;
  CMatrix layer_matrix(const std::vector<CMatrix>& bricks, bool odd) const;

  LayeredSample sample(Rng& rng) const;
  /// Product of `repetitions` independent layered samples (later on the left).
  CMatrix sample_concatenated(Rng& rng, int repetitions) const;

 private:
  LayeredGadget gadget_;
  std::vector<OpenGraph> slices_;
  std::vector<std::vector<CMatrix>> slice_tables_;
  std::vector<int> slice_columns_;  // measured columns per slice
  int brick_rows_ = 2;
  int brick_bits_ = 0;
};

LayeredSample sample_unitary(const LayeredGadget& gadget, std::uint64_t seed);

}  // namespace tdf
