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


#include "tdf/qdmx.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>

#include <json.hpp>

#include "tdf/errors.hpp"

namespace tdf::qdmx {

static_assert(std::endian::native == std::endian::little,
              "QDMX I/O assumes a little-endian host");

namespace {

constexpr char kMagic[4] = {'Q', 'D', 'M', 'X'};

void put_u32(std::ostream& out, std::uint32_t v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof v);
}

std::uint32_t get_u32(std::istream& in) {
  std::uint32_t v = 0;
  in.read(reinterpret_cast<char*>(&v), sizeof v);
  return v;
}

}  // namespace

void write_matrices(const std::string& path, const std::vector<CMatrix>& matrices) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  const std::uint32_t dim = matrices.empty() ? 0 : matrices.front().rows();
  out.write(kMagic, 4);
  put_u32(out, static_cast<std::uint32_t>(matrices.size()));
  put_u32(out, dim);
  for (const CMatrix& m : matrices) {
    if (m.rows() != dim || m.cols() != dim) {
      throw ValidationError("QDMX: all matrices must be square of one dimension");
    }
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      for (Eigen::Index c = 0; c < m.cols(); ++c) {
        const double pair[2] = {m(r, c).real(), m(r, c).imag()};
        out.write(reinterpret_cast<const char*>(pair), sizeof pair);
      }
    }
  }
  if (!out) throw Error("write failed: " + path);
}

std::vector<CMatrix> read_matrices(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  char magic[4] = {};
  in.read(magic, 4);
  if (!in || std::memcmp(magic, kMagic, 4) != 0) {
    throw ValidationError(path + ": not a QDMX file");
  }
  const std::uint32_t count = get_u32(in);
  const std::uint32_t dim = get_u32(in);
  if (!in) throw ValidationError(path + ": truncated header");
  std::vector<CMatrix> out;
  out.reserve(count);
  for (std::uint32_t k = 0; k < count; ++k) {
    CMatrix m(dim, dim);
    for (std::uint32_t r = 0; r < dim; ++r) {
      for (std::uint32_t c = 0; c < dim; ++c) {
        double pair[2];
        in.read(reinterpret_cast<char*>(pair), sizeof pair);
        m(r, c) = Complex(pair[0], pair[1]);
      }
    }
    if (!in) throw ValidationError(path + ": truncated payload");
    out.push_back(std::move(m));
  }
  return out;
}

void write_ensemble(const std::string& path, const Ensemble& ensemble) {
  std::vector<CMatrix> matrices;
  nlohmann::json side;
  side["format"] = "QDMX";
  side["count"] = ensemble.size();
  side["dim"] = ensemble.dim();
  side["probabilities"] = nlohmann::json::array();
  for (const auto& e : ensemble.entries()) {
    matrices.push_back(e.unitary.matrix());
    side["probabilities"].push_back(e.probability);
  }
  write_matrices(path, matrices);
  std::ofstream out(path + ".json");
  if (!out) throw Error("cannot write " + path + ".json");
  out << side.dump(2) << "\n";
}

Ensemble read_ensemble(const std::string& path) {
  std::vector<CMatrix> matrices = read_matrices(path);
  std::ifstream in(path + ".json");
  if (!in) throw Error("missing sidecar " + path + ".json");
  nlohmann::json side;
  try {
    in >> side;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(path + ".json: " + e.what());
  }
  const auto probs = side.at("probabilities").get<std::vector<double>>();
  if (probs.size() != matrices.size()) {
    throw ValidationError("sidecar probability count does not match QDMX count");
  }
  std::vector<EnsembleEntry> entries;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    entries.push_back({probs[i], Unitary(std::move(matrices[i]))});
  }
  return Ensemble(std::move(entries));
}

}  // namespace tdf::qdmx
