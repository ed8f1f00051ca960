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

#ifndef OSSMAX_INSTANCES_HPP_
#define OSSMAX_INSTANCES_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "ossmax/matroid.hpp"
#include "ossmax/objective.hpp"
#include "ossmax/rng.hpp"

namespace ossmax {

// Pairwise scores from a graph: 2 sigma0 across edges, 1 across non-edges.
// The result is a sigma0-semi-metric by construction.
QuadraticObjective GenGraphSemimetric(
    int num_vertices, const std::vector<std::pair<int, int>>& edges,
    double sigma0);

// Squared Euclidean distances between random points in [0,1)^dim; a
// negative-type matrix, hence 2-smooth.
QuadraticObjective GenNegativeType(int num_points, int dim,
                                   std::uint64_t seed);

// Euclidean distances between random points raised to the power p >= 1.
// p = 1 gives a metric, p = 2 a squared metric.
QuadraticObjective GenPoweredMetric(int num_points, int dim, double p,
                                    std::uint64_t seed);

// Hard instance for rounding: score 1 inside designated pairs, 1/sigma0
// elsewhere, over the matroid whose circuits are unions of t pairs. The
// planted independent set is optimal yet far below the fractional value.
struct GapInstance {
  QuadraticObjective objective;
  std::unique_ptr<Matroid> matroid;
  // Closed forms from the construction.
  double planted_value = 0;      // best integral value
  double fractional_value = 0;   // value at the uniform fractional point
  std::vector<double> fractional_point;
  double analytic_ratio_lb = 0;  // certified lower bound on the gap ratio
};

GapInstance GenGapInstance(int num_pairs, int pair_budget, double sigma0);

// Collusion matrix uniform in [0,1), factor entries in {-1,0,1}, bids set to
// bid_scale times the exact monotonicity threshold.
ProcurementObjective GenProcurement(int num_items, int num_factors,
                                    std::uint64_t seed, double bid_scale);

// Simple undirected graph with each pair kept with probability edge_prob.
std::vector<std::pair<int, int>> GenRandomGraphEdges(int num_vertices,
                                                     double edge_prob,
                                                     SplitMix64& rng);

struct InstanceMeta {
  std::string generator;  // empty for handwritten instances
  nlohmann::json parameters = nlohmann::json::object();
  std::uint64_t seed = 0;
};

// A matroid plus exactly one objective, the unit the CLI reads and writes.
struct Instance {
  std::unique_ptr<Matroid> matroid;
  std::optional<QuadraticObjective> quadratic;
  std::optional<ProcurementObjective> procurement;
  InstanceMeta meta;

  int Size() const;
  const FirstOrderObjective& Objective() const;
  bool IsQuadratic() const { return quadratic.has_value(); }

  nlohmann::json ToJson() const;
  static Instance FromJson(const nlohmann::json& doc);
};

}  // namespace ossmax

#endif  // OSSMAX_INSTANCES_HPP_
