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

#include <stdexcept>
#include <string>

namespace tdf {

// Base for every error raised by the library. The CLI maps these to exit
// code 1; usage errors are reported separately.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& message) : std::runtime_error(message) {}
};

// Malformed input: layouts, graphs, outcome strings, matrices.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& message) : Error(message) {}
};

// Inputs that must be distinct coincide.
class DegenerateInputError : public ValidationError {
 public:
  explicit DegenerateInputError(const std::string& message)
      : ValidationError(message) {}
};

// A measurement branch with (numerically) zero probability.
class DegenerateBranchError : public Error {
 public:
  explicit DegenerateBranchError(const std::string& message)
      : Error(message) {}
};

// The post-selected logical map is not unitary within tolerance, which
// means the measurement/byproduct conventions disagree with the graph.
class ConventionMismatchError : public Error {
 public:
  explicit ConventionMismatchError(const std::string& message)
      : Error(message) {}
};

// Requested object exceeds the dense or enumeration budget.
class BudgetError : public Error {
 public:
  explicit BudgetError(const std::string& message) : Error(message) {}
};

// A documented precondition of a formula or theorem does not hold.
class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& message) : Error(message) {}
};

// Iterative solver hit its iteration cap. Carries the best estimate.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& message, double best_estimate)
      : Error(message), best_estimate_(best_estimate) {}
  double best_estimate() const { return best_estimate_; }

 private:
  double best_estimate_;
};

// Working precision is too low for the requested integer-relation bounds.
class PrecisionError : public Error {
 public:
  explicit PrecisionError(const std::string& message) : Error(message) {}
};

}  // namespace tdf
