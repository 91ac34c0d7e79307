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

#include "tdf/cli.hpp"

#include <omp.h>

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <boost/version.hpp>
#include <json.hpp>

#include "tdf/design_metrics.hpp"
#include "tdf/ensemble_algebra.hpp"
#include "tdf/errors.hpp"
#include "tdf/gadget_io.hpp"
#include "tdf/graph_gadget.hpp"
#include "tdf/lie_universality.hpp"
#include "tdf/mb_extract.hpp"
#include "tdf/moment_ops.hpp"
#include "tdf/qdmx.hpp"
#include "tdf/version.hpp"

namespace tdf::cli {
namespace {

using json = nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& message) {
  if (!ok) throw UsageError(message);
}

// Every option value of every subcommand. Only one leaf runs per process.
struct Options {
  std::string config;
  std::string out;
  std::string format = "json";
  int threads = 0;

  std::string gadget;
  std::string preset;
  double angle = 0;
  int layered = 0;
  std::vector<std::string> compose;
  std::string write;
  std::string to = "dot";

  int cap = kEnumerationCap;
  bool dedup = false;
  int count = 1;
  std::uint64_t seed = 7;
  double tol = 1e-9;
  std::string ensemble;

  std::string strings;
  bool search = false;
  int max_draws = 400;
  int degree = kDefaultMaxDegree;
  double height = kDefaultMaxHeight;
  double det_threshold = 1e-6;
  double c1_phase = std::numbers::pi / 4;

  int n = 3;
  int t = 1;
  std::string brick;
  bool dense = false;
  bool matfree = false;
  std::string write_matrix;
  double c = 1700;
  std::string log = "natural";
  double solver_tol = 1e-9;
  int max_iterations = 100000;

  int k = 1;
  int samples = 3000;
  int theorem = 1;
  double eta = 0.5;
  long d = 0;
  double epsilon = 0.5;
  int k_max = 10;
  std::vector<int> ks;
  std::string path = "tpe";
};

enum class Status { kOk, kPass, kFail };

struct Outcome {
  json result;
  Status status = Status::kOk;
  std::optional<std::uint64_t> seed;
};

using Handler = std::function<Outcome(const Options&)>;
using Getter = std::function<json()>;

// Typed echo of each leaf's options, in registration order.
struct Registry {
  std::map<const CLI::App*, std::vector<std::pair<std::string, Getter>>> echo;
  std::map<const CLI::App*, Handler> handlers;

  template <class T>
  CLI::Option* option(CLI::App* app, const std::string& name, T& var,
                      const std::string& help) {
    echo[app].emplace_back(name, [&var] { return json(var); });
    return app->add_option("--" + name, var, help);
  }

  CLI::Option* flag(CLI::App* app, const std::string& name, bool& var,
                    const std::string& help) {
    echo[app].emplace_back(name, [&var] { return json(var); });
    return app->add_flag("--" + name, var, help);
  }

  bool has(const CLI::App* app, const std::string& name) const {
    auto it = echo.find(app);
    if (it == echo.end()) return false;
    for (const auto& [key, getter] : it->second) {
      if (key == name) return true;
    }
    return false;
  }
};

// ---------------------------------------------------------------------------
// Helpers

OpenGraph preset_gadget(const std::string& name, double angle) {
  if (name == "teleport") return build_brick(presets::teleport_layout(angle));
  if (name == "s_i1") return build_brick(presets::s_i1_layout());
  if (name == "s_i2") return build_brick(presets::s_i2_layout());
  if (name == "clifford") return build_brick(presets::clifford_layout());
  if (name == "b") return presets::brick_b();
  if (name == "b_clifford") return presets::brick_b_clifford();
  throw UsageError("unknown preset: " + name);
}

const std::vector<std::string> kPresets = {"teleport", "s_i1", "s_i2",
                                           "clifford", "b",    "b_clifford"};

OpenGraph load_gadget(const Options& o, const std::string& fallback) {
  OpenGraph g;
  if (!o.compose.empty()) {
    std::vector<OpenGraph> parts;
    for (const auto& path : o.compose) parts.push_back(read_gadget_file(path));
    g = compose_all(parts);
  } else if (!o.gadget.empty()) {
    g = read_gadget_file(o.gadget);
  } else {
    const std::string name = o.preset.empty() ? fallback : o.preset;
    require(!name.empty(), "give --gadget, --compose or --preset");
    g = preset_gadget(name, o.angle);
  }
  if (o.layered > 0) {
    require(o.layered >= 2, "--layered needs at least 2 wires");
    g = build_layered_gadget(o.layered, g).to_open_graph();
  }
  return g;
}

OpenGraph load_brick(const Options& o) {
  OpenGraph g = !o.brick.empty() ? read_gadget_file(o.brick)
                                 : preset_gadget(o.preset.empty() ? "b" : o.preset, o.angle);
  if (g.width() != 2) throw ValidationError("the brick must have 2 inputs");
  return g;
}

LogConvention log_convention(const std::string& s) {
  if (s == "natural") return LogConvention::kNatural;
  if (s == "base10") return LogConvention::kBase10;
  throw UsageError("--log must be natural or base10");
}

json gadget_summary(const OpenGraph& g) {
  json j{{"vertices", g.num_vertices}, {"edges", g.edges.size()},
         {"width", g.width()},         {"measured", g.num_measured()},
         {"inputs", g.inputs},         {"outputs", g.outputs}};
  if (auto layout = as_brick(g)) {
    j["brick"] = layout_to_json(*layout);
  } else {
    j["brick"] = nullptr;
  }
  return j;
}

json matrix_json(const RMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

json norm_json(const NormReport& r) {
  return {{"value", r.value}, {"method", r.method}, {"iterations", r.iterations},
          {"residual", r.residual}};
}

json scan_json(const std::vector<ScanPoint>& points, bool frame) {
  json out = json::array();
  for (const auto& p : points) {
    json j{{"k", p.k}, {"value", p.value}};
    if (frame) {
      j["std_error"] = p.std_error;
      j["haar_reference"] = p.haar_reference;
      j["haar_std_error"] = p.haar_std_error;
    } else {
      j["power_prediction"] = p.power_prediction;
      j["power_deviation"] = std::abs(p.value - p.power_prediction);
    }
    out.push_back(std::move(j));
  }
  return out;
}

SolverOptions solver(const Options& o) {
  require(o.solver_tol > 0, "--solver-tol must be positive");
  require(o.max_iterations > 0, "--max-iterations must be positive");
  return SolverOptions{o.solver_tol, o.max_iterations, o.seed};
}

void check_moment_size(const Options& o) {
  require(o.n >= 2, "--n must be at least 2");
  require(o.t >= 1, "--t must be at least 1");
  require(!(o.dense && o.matfree), "--dense and --matfree are exclusive");
}

bool use_matfree(const Options& o) {
  return o.matfree || (!o.dense && moment_dim(o.n, o.t) > kDenseBudget);
}

// ---------------------------------------------------------------------------
// gadget

Outcome gadget_build(const Options& o) {
  const OpenGraph g = load_gadget(o, "");
  if (!o.write.empty()) write_gadget_file(o.write, g);
  Outcome r;
  r.result = {{"summary", gadget_summary(g)}, {"gadget", gadget_to_json(g)}};
  r.result["written"] = o.write.empty() ? json(nullptr) : json(o.write);
  return r;
}

Outcome gadget_inspect(const Options& o) {
  const OpenGraph g = load_gadget(o, "");
  json angles = json::object();
  for (const auto& [v, a] : g.angles) angles[std::to_string(v)] = a / std::numbers::pi;
  Outcome r;
  r.result = {{"summary", gadget_summary(g)}, {"angles_over_pi", angles}};
  return r;
}

Outcome gadget_export(const Options& o) {
  const OpenGraph g = load_gadget(o, "");
  require(o.to == "dot" || o.to == "json", "--to must be dot or json");
  const std::string text = o.to == "dot" ? gadget_to_dot(g) : gadget_to_json(g).dump(2) + "\n";
  Outcome r;
  r.result = {{"format", o.to}};
  if (o.write.empty()) {
    r.result["text"] = text;
  } else {
    std::ofstream out(o.write);
    if (!out || !(out << text)) throw Error("cannot write " + o.write);
    r.result["written"] = o.write;
  }
  return r;
}

// ---------------------------------------------------------------------------
// ensemble

json uniform_json(const UniformityReport& u) {
  return {{"uniform", u.uniform}, {"expected", u.expected}, {"max_deviation", u.max_deviation}};
}

Outcome ensemble_enumerate(const Options& o) {
  const OpenGraph g = load_gadget(o, "");
  require(o.cap > 0, "--cap must be positive");
  Ensemble e = enumerate_ensemble(g, o.cap);
  const std::size_t branches = e.size();
  if (o.dedup) e = dedup_up_to_phase(e, o.tol);
  if (!o.write.empty()) qdmx::write_ensemble(o.write, e);
  Outcome r;
  r.result = {{"branches", branches},
              {"size", e.size()},
              {"dim", e.dim()},
              {"uniformity", uniform_json(check_uniform(e))}};
  r.result["written"] = o.write.empty() ? json(nullptr) : json(o.write);
  return r;
}

Outcome ensemble_sample(const Options& o) {
  require(o.count > 0, "--count must be positive");
  Outcome r;
  r.seed = o.seed;
  std::vector<CMatrix> matrices;
  json draws = json::array();
  if (o.layered > 0) {
    require(o.layered >= 2, "--layered needs at least 2 wires");
    Options brick_only = o;
    brick_only.layered = 0;
    LayeredSampler sampler(build_layered_gadget(o.layered, load_gadget(brick_only, "b")));
    Rng rng = make_stream(o.seed, 0);
    for (int i = 0; i < o.count; ++i) {
      LayeredSample s = sampler.sample(rng);
      json odd = json::array(), even = json::array();
      for (const auto& b : s.odd_bricks) odd.push_back(b.to_string());
      for (const auto& b : s.even_bricks) even.push_back(b.to_string());
      draws.push_back({{"odd", odd}, {"even", even}});
      matrices.push_back(s.unitary.matrix());
    }
  } else {
    const OpenGraph g = load_gadget(o, "");
    for (int i = 0; i < o.count; ++i) {
      Rng rng = make_stream(o.seed, static_cast<std::uint64_t>(i));
      const OutcomeString m = OutcomeString::random(rng, g.num_measured());
      matrices.push_back(extract_unitary(g, m).matrix());
      draws.push_back(m.to_string());
    }
  }
  if (!o.write.empty()) qdmx::write_matrices(o.write, matrices);
  r.result = {{"count", o.count}, {"dim", matrices.front().rows()}, {"draws", draws}};
  r.result["written"] = o.write.empty() ? json(nullptr) : json(o.write);
  return r;
}

Outcome ensemble_check_inverses(const Options& o) {
  const Ensemble e = o.ensemble.empty() ? enumerate_ensemble(load_gadget(o, ""), o.cap)
                                        : qdmx::read_ensemble(o.ensemble);
  const InverseClosureReport c = inverse_closed(e, o.tol);
  json witnesses = json::array();
  for (const auto& w : c.witness_pairs) witnesses.push_back({w.i, w.j, w.residual});
  Outcome r;
  r.result = {{"size", e.size()},
              {"closed", c.closed},
              {"max_residual", c.max_residual},
              {"unmatched", c.unmatched},
              {"witnesses", witnesses},
              {"uniformity", uniform_json(check_uniform(e))}};
  r.status = c.closed ? Status::kPass : Status::kFail;
  return r;
}

// ---------------------------------------------------------------------------
// universality

std::vector<OutcomeString> read_strings(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open strings file: " + path);
  std::vector<OutcomeString> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    out.push_back(OutcomeString::parse(line));
  }
  return out;
}

json algebraicity_json(const AlgebraicityReport& a) {
  json phases = json::array();
  for (const auto& e : a.eigenphases) {
    json j{{"theta", e.theta},
           {"two_cos_theta", e.x},
           {"multiplicity", e.multiplicity},
           {"monic", e.monic}};
    if (e.polynomial) {
      j["polynomial"] = e.polynomial->to_string();
      j["residual_log10"] = e.residual_log10;
    } else {
      j["polynomial"] = nullptr;
    }
    phases.push_back(std::move(j));
  }
  return {{"any_monic", a.any_monic}, {"eigenphases", phases}};
}

Outcome universality_verify(const Options& o) {
  const OpenGraph g = load_gadget(o, "b");
  require(o.degree >= 1, "--degree must be at least 1");
  require(o.height >= 1, "--height must be at least 1");
  require(o.det_threshold > 0, "--det-threshold must be positive");
  const UniversalityBounds bounds{o.degree, o.height, o.det_threshold, o.c1_phase};
  UniversalityReport rep;
  std::vector<OutcomeString> strings;
  Outcome r;
  if (o.search) {
    require(o.strings.empty(), "--search and --strings are exclusive");
    require(o.max_draws > 0, "--max-draws must be positive");
    SearchResult s = search_universal_candidates(g, o.seed, o.max_draws, bounds);
    rep = std::move(s.report);
    strings = std::move(s.strings);
    r.result["draws"] = s.attempts;
    r.seed = o.seed;
  } else {
    require(!o.strings.empty(), "give --strings FILE or --search");
    strings = read_strings(o.strings);
    require(strings.size() == 4, "the strings file must hold exactly 4 outcome strings");
    rep = verify_universality(candidates_from_strings(g, strings), bounds);
  }
  json labels = json::array();
  for (const auto& s : strings) labels.push_back(s.to_string());
  json c2 = json::array();
  for (const auto& a : rep.c2) c2.push_back(algebraicity_json(a));
  r.result["strings"] = labels;
  r.result["c1"] = {{"det", rep.c1.det},
                    {"spans", rep.c1.spans},
                    {"threshold", o.det_threshold},
                    {"phase", rep.c1_phase},
                    {"coefficients", matrix_json(rep.c1.coefficients)}};
  r.result["c2"] = {{"pass", rep.c2_pass},
                    {"max_degree", o.degree},
                    {"max_height", o.height},
                    {"candidates", c2}};
  r.result["branch_ambiguous"] = rep.branch_ambiguous;
  r.result["su4_reduction_residual"] = rep.su4_reduction_residual;
  r.result["pass"] = rep.pass;
  r.status = rep.pass && strings.size() == 4 ? Status::kPass : Status::kFail;
  return r;
}

// ---------------------------------------------------------------------------
// moments

Outcome moments_tpe_norm(const Options& o) {
  check_moment_size(o);
  const CMatrix local = brick_moment(load_brick(o), o.t);
  const HaarProjector p0(Eigen::Index(1) << o.n, o.t);
  NormReport norm;
  if (use_matfree(o)) {
    norm = tpe_norm(layered_moment_operator(local, o.n, o.t), p0, solver(o));
  } else {
    const CMatrix m = layered_moment(local, o.n, o.t);
    if (!o.write_matrix.empty()) qdmx::write_matrices(o.write_matrix, {m});
    norm = tpe_norm(m, p0);
  }
  Outcome r;
  r.result = norm_json(norm);
  r.result["moment_dim"] = moment_dim(o.n, o.t);
  r.result["haar_rank"] = p0.rank();
  r.result["below_one"] = norm.value < 1;
  r.status = norm.value < 1 ? Status::kPass : Status::kFail;
  if (norm.method == "power-iteration") r.seed = o.seed;
  return r;
}

Outcome moments_gap(const Options& o) {
  check_moment_size(o);
  const LogConvention conv = log_convention(o.log);
  require(o.c > 0, "--c must be positive");
  const CMatrix local = brick_moment(load_brick(o), o.t);
  GapReport gap;
  Outcome r;
  if (use_matfree(o)) {
    gap = spectral_gap(glrc_hamiltonian_map(local, o.n, o.t), o.n, o.t, 2.0 * (o.n - 1),
                       solver(o));
    r.seed = o.seed;
  } else {
    gap = spectral_gap(glrc_hamiltonian(local, o.n, o.t));
  }
  r.result = {{"gap", gap.gap},
              {"method", gap.method},
              {"residual", gap.residual},
              {"iterations", gap.iterations},
              {"kernel_dim", gap.kernel_dim},
              {"ground_energy", gap.ground_energy},
              {"lrc_bound", lrc_gap_bound(o.t, conv)},
              {"glrc_bound", glrc_gap_bound(o.t, o.c, conv)}};
  return r;
}

Outcome moments_detectability(const Options& o) {
  check_moment_size(o);
  require(!o.matfree, "detectability needs the dense eigensolve");
  const DetectabilityResult d = detectability_check(brick_moment(load_brick(o), o.t), o.n, o.t);
  Outcome r;
  r.result = {{"lhs", d.lhs}, {"rhs", d.rhs}, {"gap", d.gap}, {"holds", d.holds}};
  r.status = d.holds ? Status::kPass : Status::kFail;
  return r;
}

Outcome moments_lemma3(const Options& o) {
  check_moment_size(o);
  require(!o.matfree, "lemma3 compares dense matrices");
  const Lemma3Result l = lemma3_factorization(build_layered_gadget(o.n, load_brick(o)), o.t);
  if (!o.write_matrix.empty()) qdmx::write_matrices(o.write_matrix, {l.direct, l.factored});
  Outcome r;
  r.result = {{"max_diff", l.max_diff}, {"tolerance", o.tol}, {"moment_dim", l.direct.rows()}};
  r.status = l.max_diff < o.tol ? Status::kPass : Status::kFail;
  return r;
}

// ---------------------------------------------------------------------------
// metrics

Outcome metrics_frame_potential(const Options& o) {
  require(o.t >= 1, "--t must be at least 1");
  Outcome r;
  if (!o.ensemble.empty()) {
    const Ensemble e = qdmx::read_ensemble(o.ensemble);
    r.result = {{"exact", frame_potential_exact(e, o.t)}, {"dim", e.dim()}};
    return r;
  }
  require(o.n >= 2, "--n must be at least 2");
  require(o.k >= 1, "--k must be at least 1");
  require(o.samples >= kFrameBatches, "--samples must be at least the batch count");
  LayeredSampler sampler(build_layered_gadget(o.n, load_brick(o)));
  const int reps = o.k;
  const FramePotentialEstimate f = frame_potential(
      [&sampler, reps](Rng& rng) { return sampler.sample_concatenated(rng, reps); },
      Eigen::Index(1) << o.n, o.t, o.samples, o.seed);
  const double sigma = std::sqrt(f.std_error * f.std_error + f.haar_std_error * f.haar_std_error);
  r.seed = o.seed;
  r.result = {{"estimate", f.estimate},
              {"std_error", f.std_error},
              {"haar_reference", f.haar_reference},
              {"haar_std_error", f.haar_std_error},
              {"within_3_sigma", std::abs(f.estimate - f.haar_reference) <= 3 * sigma}};
  r.result["haar_exact"] = f.haar_exact ? json(*f.haar_exact) : json(nullptr);
  return r;
}

json k_bound_json(const KBoundReport& k) {
  json j{{"n", k.n},     {"t", k.t},     {"epsilon", k.epsilon},
         {"raw", k.raw}, {"k_required", k.k_required}};
  j["eta"] = k.eta ? json(*k.eta) : json(nullptr);
  j["c"] = k.c ? json(*k.c) : json(nullptr);
  return j;
}

Outcome metrics_k_bound(const Options& o) {
  require(o.theorem == 1 || o.theorem == 3, "--theorem must be 1 or 3");
  Outcome r;
  if (o.theorem == 1) {
    const Eigen::Index d = o.d > 0 ? o.d : (Eigen::Index(1) << o.n);
    r.result = k_bound_json(theorem1_k(o.eta, d, o.t, o.epsilon));
    r.result["d"] = d;
  } else {
    r.result = k_bound_json(theorem3_k(o.n, o.t, o.epsilon, o.c, log_convention(o.log)));
    r.result["min_n"] = theorem3_min_n(o.t);
  }
  return r;
}

Outcome metrics_scan(const Options& o) {
  require(o.path == "tpe" || o.path == "frame", "--path must be tpe or frame");
  require(o.n >= 2 && o.t >= 1, "--n >= 2 and --t >= 1 required");
  require(o.k_max >= 1, "--k-max must be at least 1");
  const OpenGraph brick = load_brick(o);
  Outcome r;
  if (o.path == "tpe") {
    const CMatrix m = layered_moment(brick_moment(brick, o.t), o.n, o.t);
    const HaarProjector p0(Eigen::Index(1) << o.n, o.t);
    r.result = {{"path", "tpe"},
                {"points", scan_json(concatenation_scan_tpe(m, p0, o.k_max), false)},
                {"subdominant_radius", subdominant_radius(m, p0)},
                {"hermitian_defect", max_abs(m - m.adjoint())}};
    return r;
  }
  require(o.samples >= kFrameBatches, "--samples must be at least the batch count");
  std::vector<int> ks = o.ks;
  if (ks.empty()) {
    for (int k = 1; k <= o.k_max; ++k) ks.push_back(k);
  }
  LayeredSampler sampler(build_layered_gadget(o.n, brick));
  r.seed = o.seed;
  r.result = {{"path", "frame"},
              {"points", scan_json(concatenation_scan_frame(sampler, o.t, ks, o.samples, o.seed),
                                   true)}};
  return r;
}

// ---------------------------------------------------------------------------
// Reports

std::string digest(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

json versions() {
  return {{"tdesign-forge", kVersion},
          {"eigen", std::to_string(EIGEN_WORLD_VERSION) + "." +
                        std::to_string(EIGEN_MAJOR_VERSION) + "." +
                        std::to_string(EIGEN_MINOR_VERSION)},
          {"boost", BOOST_LIB_VERSION},
          {"cli11", CLI11_VERSION},
          {"nlohmann_json", std::to_string(NLOHMANN_JSON_VERSION_MAJOR) + "." +
                                std::to_string(NLOHMANN_JSON_VERSION_MINOR) + "." +
                                std::to_string(NLOHMANN_JSON_VERSION_PATCH)}};
}

void flatten(const json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object() || j.is_array()) {
    if (j.empty()) {
      out << prefix << "," << j.dump() << "\n";
      return;
    }
    for (auto it = j.begin(); it != j.end(); ++it) {
      const std::string key = j.is_object() ? it.key() : std::to_string(std::distance(j.begin(), it));
      flatten(*it, prefix.empty() ? key : prefix + "." + key, out);
    }
    return;
  }
  std::string value = j.is_string() ? j.get<std::string>() : j.dump();
  if (value.find_first_of(",\"\n") != std::string::npos) {
    std::string quoted = "\"";
    for (char ch : value) {
      if (ch == '"') quoted += '"';
      quoted += ch;
    }
    value = quoted + "\"";
  }
  out << prefix << "," << value << "\n";
}

void emit(const json& report, const Options& o) {
  std::ostringstream text;
  if (o.format == "csv") {
    text << "key,value\n";
    flatten(report, "", text);
  } else {
    text << report.dump(2) << "\n";
  }
  if (o.out.empty()) {
    std::cout << text.str();
    return;
  }
  std::ofstream out(o.out);
  if (!out || !(out << text.str())) throw Error("cannot write report " + o.out);
}

std::string error_type(const std::exception& e) {
  if (dynamic_cast<const DegenerateInputError*>(&e)) return "degenerate_input";
  if (dynamic_cast<const ValidationError*>(&e)) return "validation";
  if (dynamic_cast<const BudgetError*>(&e)) return "budget";
  if (dynamic_cast<const PreconditionError*>(&e)) return "precondition";
  if (dynamic_cast<const ConvergenceError*>(&e)) return "convergence";
  if (dynamic_cast<const PrecisionError*>(&e)) return "precision";
  if (dynamic_cast<const ConventionMismatchError*>(&e)) return "convention_mismatch";
  if (dynamic_cast<const DegenerateBranchError*>(&e)) return "degenerate_branch";
  if (dynamic_cast<const Error*>(&e)) return "error";
  if (dynamic_cast<const json::exception*>(&e)) return "json";
  return "internal";
}

json config_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw UsageError("config file " + path + ": " + e.what());
  }
  if (!j.is_object()) throw UsageError("config file " + path + " must hold a JSON object");
  return j;
}

std::string config_value(const json& v, const std::string& key) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number() || v.is_boolean()) return v.dump();
  throw UsageError("config key '" + key + "' must be a scalar or a list of scalars");
}

// Options missing on the command line take their value from the config file.
void apply_config(CLI::App* leaf, const Registry& reg, const std::string& path) {
  const json cfg = config_from_file(path);
  for (const auto& [key, value] : cfg.items()) {
    if (key == "config" || !reg.has(leaf, key)) {
      throw UsageError("unknown config key '" + key + "' for " + leaf->get_name());
    }
    CLI::Option* opt = leaf->get_option("--" + key);
    if (opt->count() > 0) continue;
    try {
      if (value.is_array()) {
        for (const auto& v : value) opt->add_result(config_value(v, key));
      } else {
        opt->add_result(config_value(value, key));
      }
      opt->run_callback();
    } catch (const CLI::Error& e) {
      throw UsageError("config key '" + key + "': " + e.what());
    }
  }
}

void add_common(Registry& reg, CLI::App* app, Options& o) {
  reg.option(app, "config", o.config, "JSON object of option values; flags take precedence");
  reg.option(app, "out", o.out, "report path (default: stdout)");
  reg.option(app, "format", o.format, "report format")->check(CLI::IsMember({"json", "csv"}));
  reg.option(app, "threads", o.threads, "worker threads, 0 = $TDESIGN_THREADS or runtime default")
      ->check(CLI::NonNegativeNumber);
}

void add_gadget_source(Registry& reg, CLI::App* app, Options& o) {
  reg.option(app, "gadget", o.gadget, "gadget or brick layout JSON file");
  reg.option(app, "compose", o.compose, "gadget files composed left to right");
  reg.option(app, "preset", o.preset, "built-in gadget")->check(CLI::IsMember(kPresets));
  reg.option(app, "angle", o.angle, "angle of the teleport preset (radians)");
  reg.option(app, "layered", o.layered, "wrap the gadget as an N-wire layered gadget");
}

void add_brick_source(Registry& reg, CLI::App* app, Options& o) {
  reg.option(app, "brick", o.brick, "2-wire brick gadget JSON (default: preset b)");
  reg.option(app, "preset", o.preset, "built-in brick")->check(CLI::IsMember(kPresets));
  reg.option(app, "angle", o.angle, "angle of the teleport preset (radians)");
}

void add_moment_size(Registry& reg, CLI::App* app, Options& o) {
  reg.option(app, "n", o.n, "qubits");
  reg.option(app, "t", o.t, "moment order");
}

void add_solver(Registry& reg, CLI::App* app, Options& o) {
  reg.flag(app, "dense", o.dense, "force dense linear algebra");
  reg.flag(app, "matfree", o.matfree, "force matrix-free power iteration");
  reg.option(app, "solver-tol", o.solver_tol, "power iteration tolerance");
  reg.option(app, "max-iterations", o.max_iterations, "power iteration cap");
  reg.option(app, "seed", o.seed, "start vector seed");
}

CLI::App* leaf(CLI::App* parent, Registry& reg, Options& o, const std::string& name,
               const std::string& help, Handler h) {
  CLI::App* app = parent->add_subcommand(name, help);
  add_common(reg, app, o);
  reg.handlers[app] = std::move(h);
  return app;
}

void build_tree(CLI::App& app, Registry& reg, Options& o) {
  app.require_subcommand(1);

  CLI::App* gadget = app.add_subcommand("gadget", "build, inspect and export gadgets");
  gadget->require_subcommand(1);
  CLI::App* a = leaf(gadget, reg, o, "build", "build a gadget and optionally write it", gadget_build);
  add_gadget_source(reg, a, o);
  reg.option(a, "write", o.write, "write the gadget JSON here");
  a = leaf(gadget, reg, o, "inspect", "summarise a gadget", gadget_inspect);
  add_gadget_source(reg, a, o);
  a = leaf(gadget, reg, o, "export", "render a gadget as Graphviz or JSON", gadget_export);
  add_gadget_source(reg, a, o);
  reg.option(a, "to", o.to, "dot or json");
  reg.option(a, "write", o.write, "output file (default: embedded in the report)");

  CLI::App* ens = app.add_subcommand("ensemble", "measurement-branch ensembles");
  ens->require_subcommand(1);
  a = leaf(ens, reg, o, "enumerate", "enumerate every outcome branch", ensemble_enumerate);
  add_gadget_source(reg, a, o);
  reg.option(a, "cap", o.cap, "largest number of measured vertices to enumerate");
  reg.flag(a, "dedup", o.dedup, "merge phase-equal branches");
  reg.option(a, "tol", o.tol, "phase-equality tolerance");
  reg.option(a, "write", o.write, "write the ensemble as QDMX (plus .json sidecar)");
  a = leaf(ens, reg, o, "sample", "draw random branches", ensemble_sample);
  add_gadget_source(reg, a, o);
  reg.option(a, "count", o.count, "number of draws");
  reg.option(a, "seed", o.seed, "master seed");
  reg.option(a, "write", o.write, "write the sampled unitaries as QDMX");
  a = leaf(ens, reg, o, "check-inverses", "inverse closure up to phase", ensemble_check_inverses);
  add_gadget_source(reg, a, o);
  reg.option(a, "ensemble", o.ensemble, "QDMX ensemble instead of a gadget");
  reg.option(a, "cap", o.cap, "largest number of measured vertices to enumerate");
  reg.option(a, "tol", o.tol, "phase-equality tolerance");

  CLI::App* uni = app.add_subcommand("universality", "Lie-algebra and eigenphase tests");
  uni->require_subcommand(1);
  a = leaf(uni, reg, o, "verify", "check four candidates (or search for them)", universality_verify);
  add_gadget_source(reg, a, o);
  reg.option(a, "strings", o.strings, "file with four outcome strings, one per line");
  reg.flag(a, "search", o.search, "search outcome strings instead");
  reg.option(a, "seed", o.seed, "search seed");
  reg.option(a, "max-draws", o.max_draws, "search budget in drawn strings");
  reg.option(a, "degree", o.degree, "largest polynomial degree");
  reg.option(a, "height", o.height, "largest coefficient height");
  reg.option(a, "det-threshold", o.det_threshold, "spanning determinant threshold");
  reg.option(a, "c1-phase", o.c1_phase, "global phase applied before taking logs");

  CLI::App* mom = app.add_subcommand("moments", "moment operators of layered gadgets");
  mom->require_subcommand(1);
  a = leaf(mom, reg, o, "tpe-norm", "||M - P0|| for the n-wire layered gadget", moments_tpe_norm);
  add_brick_source(reg, a, o);
  add_moment_size(reg, a, o);
  add_solver(reg, a, o);
  reg.option(a, "write-matrix", o.write_matrix, "write the dense moment as QDMX");
  a = leaf(mom, reg, o, "gap", "spectral gap of the local-projector Hamiltonian", moments_gap);
  add_brick_source(reg, a, o);
  add_moment_size(reg, a, o);
  add_solver(reg, a, o);
  reg.option(a, "c", o.c, "gate-set constant of the gap bound");
  reg.option(a, "log", o.log, "natural or base10")->check(CLI::IsMember({"natural", "base10"}));
  a = leaf(mom, reg, o, "detectability", "projector-product bound from the gap",
           moments_detectability);
  add_brick_source(reg, a, o);
  add_moment_size(reg, a, o);
  reg.flag(a, "dense", o.dense, "dense (the only mode)");
  reg.flag(a, "matfree", o.matfree, "rejected");
  a = leaf(mom, reg, o, "lemma3", "direct moment vs the layer product", moments_lemma3);
  add_brick_source(reg, a, o);
  add_moment_size(reg, a, o);
  reg.flag(a, "dense", o.dense, "dense (the only mode)");
  reg.flag(a, "matfree", o.matfree, "rejected");
  reg.option(a, "tol", o.tol, "pass threshold on the max entry difference");
  reg.option(a, "write-matrix", o.write_matrix, "write both matrices as QDMX");

  CLI::App* met = app.add_subcommand("metrics", "design diagnostics and bounds");
  met->require_subcommand(1);
  a = leaf(met, reg, o, "frame-potential", "frame potential of k concatenated layered gadgets",
           metrics_frame_potential);
  add_brick_source(reg, a, o);
  reg.option(a, "n", o.n, "qubits");
  reg.option(a, "t", o.t, "order");
  reg.option(a, "k", o.k, "concatenations");
  reg.option(a, "samples", o.samples, "sampled pairs");
  reg.option(a, "seed", o.seed, "master seed");
  reg.option(a, "ensemble", o.ensemble, "exact value for a QDMX ensemble instead");
  a = leaf(met, reg, o, "k-bound", "iterations needed for an epsilon-design", metrics_k_bound);
  reg.option(a, "theorem", o.theorem, "1 (from eta) or 3 (from the gap bound)");
  reg.option(a, "eta", o.eta, "TPE parameter");
  reg.option(a, "d", o.d, "dimension (theorem 1; default 2^n)");
  reg.option(a, "n", o.n, "qubits");
  reg.option(a, "t", o.t, "order");
  reg.option(a, "epsilon", o.epsilon, "target accuracy");
  reg.option(a, "c", o.c, "gate-set constant");
  reg.option(a, "log", o.log, "natural or base10")->check(CLI::IsMember({"natural", "base10"}));
  a = leaf(met, reg, o, "scan", "diagnostics over k concatenations", metrics_scan);
  add_brick_source(reg, a, o);
  reg.option(a, "n", o.n, "qubits");
  reg.option(a, "t", o.t, "order");
  reg.option(a, "path", o.path, "tpe or frame")->check(CLI::IsMember({"tpe", "frame"}));
  reg.option(a, "k-max", o.k_max, "largest k");
  reg.option(a, "ks", o.ks, "explicit k values (frame path)");
  reg.option(a, "samples", o.samples, "sampled pairs per k (frame path)");
  reg.option(a, "seed", o.seed, "master seed");
}

int set_threads(const Options& o) {
  int threads = o.threads;
  if (threads == 0) {
    if (const char* env = std::getenv(kThreadsEnv)) {
      try {
        threads = std::stoi(env);
      } catch (const std::exception&) {
        throw UsageError(std::string(kThreadsEnv) + " is not an integer");
      }
      if (threads < 0) throw UsageError(std::string(kThreadsEnv) + " must be >= 0");
    }
  }
  if (threads > 0) omp_set_num_threads(threads);
  return threads;
}

}  // namespace

int run(const std::vector<std::string>& args) {
  Options o;
  Registry reg;
  CLI::App app{"tdesign: measurement-based unitary design toolkit", "tdesign"};
  app.set_version_flag("--version", kVersion);
  build_tree(app, reg, o);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  CLI::App* cmd = &app;
  while (!cmd->get_subcommands().empty()) cmd = cmd->get_subcommands().front();
  const std::string command = cmd->get_parent()->get_name() + " " + cmd->get_name();

  auto config_echo = [&] {
    json j = json::object();
    for (const auto& [key, getter] : reg.echo[cmd]) j[key] = getter();
    return j;
  };

  const auto start = std::chrono::steady_clock::now();
  try {
    if (!o.config.empty()) apply_config(cmd, reg, o.config);
    set_threads(o);
    const Outcome out = reg.handlers.at(cmd)(o);
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    json report{{"schema", kReportSchema},
                {"command", command},
                {"versions", versions()},
                {"config", config_echo()},
                {"result", out.result}};
    report["seed"] = out.seed ? json(*out.seed) : json(nullptr);
    report["status"] = out.status == Status::kOk     ? "ok"
                       : out.status == Status::kPass ? "pass"
                                                     : "fail";
    report["digest"] = digest(report.dump());
    report["timings"] = {{"wall_seconds", seconds}};
    emit(report, o);
    return out.status == Status::kFail ? kExitFailed : kExitOk;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    json report{{"schema", kReportSchema},
                {"command", command},
                {"versions", versions()},
                {"config", config_echo()},
                {"status", "error"},
                {"error", {{"type", error_type(e)}, {"message", e.what()}}}};
    try {
      emit(report, o);
    } catch (const std::exception& inner) {
      std::cerr << "error: " << inner.what() << "\n";
    }
    return kExitError;
  }
}

int run(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args);
}

}  // namespace tdf::cli
