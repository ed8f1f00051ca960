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

#ifndef OSSMAX_SOLVE_HPP_
#define OSSMAX_SOLVE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ossmax/greedy.hpp"
#include "ossmax/instances.hpp"

namespace ossmax {

struct SolveOptions {
  GreedyConfig greedy;
  // Resolve the mode from the objective: one-step for diversity quadratics,
  // multilinear otherwise. When false the mode in greedy is taken as is.
  bool auto_mode = true;
  // Estimate sigma from the instance instead of taking greedy.sigma.
  bool auto_sigma = true;
  // Round the fractional solution; applies to diversity objectives only.
  bool round = true;
  // Also compute the exact discrete optimum (n <= 16) and the ratio.
  bool brute_force = false;
  bool with_timing = true;
};

struct SolveReport {
  InstanceMeta meta;
  ResolvedGreedyConfig config;
  double fractional_value = 0;
  double certified_bound = 0;
  std::optional<Subset> rounded_set;
  std::optional<double> rounded_value;
  std::optional<double> gap_certificate;
  std::optional<std::string> method;
  std::optional<double> brute_force_value;
  // Rounded value (fractional value when rounding is skipped) over the
  // brute-force optimum; absent without brute force or at optimum zero.
  std::optional<double> achieved_ratio;
  std::optional<double> wall_time_ms;

  nlohmann::json ToJson() const;
};

// Full pipeline on one instance: greedy ascent, then rounding of the
// saturated decomposition for diversity objectives.
SolveReport Solve(const Instance& instance, const SolveOptions& opts);

// Grid sweep emitting one CSV row per cell. Which lists apply depends on the
// family; empty applicable lists produce a header-only CSV.
struct SweepRequest {
  std::string family;               // graph | negtype | powered | gap | procurement
  std::vector<int> sizes;           // vertices, points, items, or pair count k
  std::vector<double> sigma0;       // graph and gap score strength
  std::vector<double> powers;       // exponents for the powered family
  std::vector<int> budgets;         // pair budget t for the gap family
  std::vector<std::uint64_t> seeds; // ignored by the deterministic gap family
  int dim = 2;                      // point dimension for geometric families
  int factors = 2;                  // procurement factor count
  bool brute_force = true;
};

std::string SweepCsvHeader();

// Header plus one row per grid cell in deterministic order; per-cell errors
// land in the final column with the value columns left empty.
std::string RunSweep(const SweepRequest& req);

}  // namespace ossmax

#endif  // OSSMAX_SOLVE_HPP_
