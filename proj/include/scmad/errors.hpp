// Copyright 2026 The SC-MAD Authors.
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

#ifndef SCMAD_ERRORS_HPP
#define SCMAD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace scmad {

// Invalid argument values (out-of-range nodes, bad weights, bad schemes).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Mismatched grid resolutions or dimensions between operands.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input exceeds a hard size cap (brute-force enumeration limits).
class CapabilityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Malformed or inconsistent input data (file parsing, closure violations).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Iterative solver failed to reach the requested tolerance.
class SolverError : public std::runtime_error {
 public:
  SolverError(const std::string& what, double primal_residual,
              double dual_residual)
      : std::runtime_error(what),
        primal_residual(primal_residual),
        dual_residual(dual_residual) {}
  double primal_residual;
  double dual_residual;
};

}  // namespace scmad

#endif  // SCMAD_ERRORS_HPP
