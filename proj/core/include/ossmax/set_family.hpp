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

#ifndef OSSMAX_SET_FAMILY_HPP_
#define OSSMAX_SET_FAMILY_HPP_

#include <vector>

#include <nlohmann/json.hpp>

#include "ossmax/matroid.hpp"

namespace ossmax {

struct WeightedSet {
  double weight = 0;
  Subset set;
};

// A weighted list of subsets; with weights summing to one this is a convex
// combination of indicator vectors.
struct WeightedSetFamily {
  std::vector<WeightedSet> entries;

  double TotalWeight() const;

  // The point sum(weight * indicator(set)) in R^n.
  std::vector<double> PointOf(int num_elements) const;

  nlohmann::json ToJson() const;
  static WeightedSetFamily FromJson(const nlohmann::json& doc);
};

// Throws InputError unless all weights are non-negative, they sum to one
// within 1e-9, and every set is independent in m.
void ValidateConvexIndependent(const Matroid& m, const WeightedSetFamily& f);

}  // namespace ossmax

#endif  // OSSMAX_SET_FAMILY_HPP_
