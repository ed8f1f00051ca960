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

#ifndef OSSMAX_GREEDY_HPP_
#define OSSMAX_GREEDY_HPP_

#include <optional>
#include <string>
#include <vector>

#include "ossmax/matroid.hpp"
#include "ossmax/objective.hpp"
#include "ossmax/set_family.hpp"

namespace ossmax {

// How the continuous trajectory is discretized.
//   kOneStep:     a single step of size one; sound when the Hessian is
//                 copositive, which holds for diversity objectives.
//   kMultilinear: step size capped by (1 - alpha) / n^3, sound for any
//                 multilinear objective.
//   kEtaLocal:    step size capped by 1 / (n eta (1 - alpha)) using a known
//                 locality parameter eta of the gradient.
enum class GreedyMode { kOneStep, kMultilinear, kEtaLocal };

std::string GreedyModeName(GreedyMode mode);
GreedyMode GreedyModeFromName(const std::string& name);

struct GreedyConfig {
  std::optional<double> alpha;  // jump-start height; nullopt resolves it
  std::optional<double> delta;  // step size; nullopt picks the largest sound
  GreedyMode mode = GreedyMode::kOneStep;
  double sigma = 0;             // one-sided smoothness parameter
  std::optional<double> eta;    // required for kEtaLocal
};

// Config with every choice pinned down.
struct ResolvedGreedyConfig {
  GreedyMode mode = GreedyMode::kOneStep;
  double alpha = 0;
  double delta = 1;
  double sigma = 0;
  double eta = 0;
  double mu = 1;  // per-step gain fraction from the jump-start analysis
  int steps = 1;
  bool third_order = true;
};

// Optimal jump-start height for the general guarantee; zero when sigma is.
double BestAlpha(double sigma);

// Continuous-limit guarantee 1 - exp(-(1-a) (a/(a+1))^(2 sigma)).
double BoundGeneral(double alpha, double sigma);

// Guarantee 1 - exp(-a(1-a)/(a+sigma)) under non-positive third derivatives.
// Throws InputError at the degenerate point alpha = sigma = 0.
double BoundThirdOrder(double alpha, double sigma);

// Fraction of the optimum certified by the discretized run: the continuous
// guarantee composed with the mode's discretization slack.
double DiscretizationFactor(const ResolvedGreedyConfig& cfg, int n);

// Resolves auto choices. third_order selects the per-step gain formula and
// the auto alpha; n bounds the multilinear step size.
ResolvedGreedyConfig ResolveConfig(const GreedyConfig& cfg, bool third_order,
                                   int n);

struct GreedyRun {
  ResolvedGreedyConfig config;
  std::vector<std::vector<double>> iterates;  // steps + 1 points
  std::vector<Subset> vertices;               // LMO answer per step
  std::vector<double> values;                 // F at each iterate
  std::vector<double> final_point;
  WeightedSetFamily decomposition;            // final point as a convex sum
  double certified_bound = 0;
};

// Jump-start continuous greedy: start at alpha times the largest basis, then
// follow the max-weight vertex of the gradient for the remaining mass.
GreedyRun RunJumpStart(const FirstOrderObjective& f, const Matroid& m,
                       const GreedyConfig& cfg);

}  // namespace ossmax

#endif  // OSSMAX_GREEDY_HPP_
