// Copyright 2026 The Authors.
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

#ifndef OSSMAX_ERRORS_HPP_
#define OSSMAX_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace ossmax {

// Bad user input: malformed files, inconsistent dimensions, invalid config.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A numerical guarantee that should hold by construction failed to hold.
class VerificationError : public std::runtime_error {
 public:
  explicit VerificationError(const std::string& what)
      : std::runtime_error(what) {}
};

// Semi-metric estimation hit a triple with positive numerator over a zero
// denominator: no finite smoothness parameter exists.
class InfiniteSigmaError : public InputError {
 public:
  explicit InfiniteSigmaError(const std::string& what) : InputError(what) {}
};

// The greedy loop saw a gradient entry below -1e-9; the objective is not
// monotone on the trajectory and the guarantees are void.
class NonMonotoneGradientError : public InputError {
 public:
  explicit NonMonotoneGradientError(const std::string& what)
      : InputError(what) {}
};

// A user-supplied step size whose reciprocal is not an integer.
class StepNotDivisibleError : public InputError {
 public:
  explicit StepNotDivisibleError(const std::string& what) : InputError(what) {}
};

// Coverage rounding needs every circuit to have at least three elements.
class CircuitTooSmallError : public InputError {
 public:
  explicit CircuitTooSmallError(const std::string& what) : InputError(what) {}
};

// The coverage family came out short of its pairwise or singleton targets.
class CoverageConditionError : public VerificationError {
 public:
  explicit CoverageConditionError(const std::string& what)
      : VerificationError(what) {}
};

// Basis exchange failed to produce a swappable pair; the independence oracle
// does not describe a matroid.
class NoExchangePairError : public InputError {
 public:
  explicit NoExchangePairError(const std::string& what) : InputError(what) {}
};

}  // namespace ossmax

#endif  // OSSMAX_ERRORS_HPP_
