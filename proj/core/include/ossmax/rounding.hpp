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

#ifndef OSSMAX_ROUNDING_HPP_
#define OSSMAX_ROUNDING_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ossmax/matroid.hpp"
#include "ossmax/objective.hpp"
#include "ossmax/set_family.hpp"

namespace ossmax {

// Extends every set to a basis and merges duplicates, keeping first
// occurrence order. Input must be a convex combination of independent sets.
WeightedSetFamily SaturateToBases(const Matroid& m,
                                  const WeightedSetFamily& family);

// A weighted family of independent sets that covers every pair (u, v) with
// total weight at least x(u) x(v) and every singleton v with at least x(v),
// where x is the point of the source basis decomposition. Averaging f over
// the family then dominates F(x).
struct QuadraticCoverage {
  WeightedSetFamily family;
  double total_weight = 0;
  std::vector<double> source_point;
  // Construction statistics, checked against their analytic bounds.
  int max_leftover = 0;   // largest residual block |Z|
  int max_pair_sets = 0;  // most sets contributed by a single basis pair
};

// Builds the coverage family for a basis decomposition. Needs every circuit
// to have at least three elements; throws CircuitTooSmallError otherwise and
// CoverageConditionError if a certified inequality fails to verify.
QuadraticCoverage BuildQuadraticCoverage(const Matroid& m,
                                         const WeightedSetFamily& bases);

struct RoundedSet {
  Subset set;
  double value = 0;
  double gap_certificate = 0;
  std::string method;
};

// Best single set of the coverage family; its value times total_weight
// dominates F at the source point. Diversity objectives only.
RoundedSet RoundByCoverage(const QuadraticObjective& q,
                           const QuadraticCoverage& coverage);

struct MergeResult {
  Subset merged;
  // One (i, j) per swap, i from the first basis, j from the second.
  std::vector<std::pair<int, int>> matching;
  double worst_step_violation = 0;
};

// Merges the first two entries of the family into one basis by symmetric
// exchanges, keeping at each swap the element with the larger marginal value
// against the rest of the decomposition. The per-swap loss never exceeds the
// pair weight times A at the swapped pair; that is checked numerically.
MergeResult MergeBases(const QuadraticObjective& q, const Matroid& m,
                       const WeightedSetFamily& family);

struct SwapRoundResult {
  Subset set;
  double value = 0;
  double gap_certificate = 0;
  // Swap pairs recorded by each sequential merge.
  std::vector<std::vector<std::pair<int, int>>> matchings;
  int heaviest_matching = 0;  // index of the matching with the largest A mass
  double worst_step_violation = 0;
};

// Sequentially merges the decomposition into one basis, then re-merges the
// stage whose matching carried the most pairwise mass at equal weights and
// returns the better of the two candidates. Requires rank >= 2 unless the
// family is a single basis, which is returned exactly.
SwapRoundResult SwapRound(const QuadraticObjective& q, const Matroid& m,
                          const WeightedSetFamily& bases, double sigma);

struct RoundBestResult {
  Subset set;
  double value = 0;
  double gap_certificate = 0;  // min over the certificates that apply
  std::string method;
  std::optional<double> coverage_value;
  std::optional<double> swap_value;
};

// Runs whichever of the two rounding procedures applies and keeps the better
// set. Throws InputError when neither applies.
RoundBestResult RoundBest(const QuadraticObjective& q, const Matroid& m,
                          const WeightedSetFamily& bases, double sigma);

// Expresses a point of the independence polytope as a convex combination of
// independent sets by exhaustive peeling. Test utility; exponential in the
// support size, limited to n <= 12.
WeightedSetFamily DecomposePoint(const Matroid& m,
                                 const std::vector<double>& x);

}  // namespace ossmax

#endif  // OSSMAX_ROUNDING_HPP_
