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

#ifndef OSSMAX_TOLERANCES_HPP_
#define OSSMAX_TOLERANCES_HPP_

namespace ossmax {

// Every inequality the library certifies uses one of these slacks; keeping
// them in one place makes the certification story auditable.

// Absolute slack on guarantee and coverage inequalities.
inline constexpr double kIneqTol = 1e-9;

// Relative slack when comparing analytic gradients against finite differences
// or exhaustive expansions.
inline constexpr double kRelTol = 1e-6;

// Absolute slack on smoothness (curvature vs gradient) checks.
inline constexpr double kOssSlack = 1e-12;

// Decomposition weights below this are treated as zero.
inline constexpr double kTinyWeight = 1e-12;

}  // namespace ossmax

#endif  // OSSMAX_TOLERANCES_HPP_
