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

#include "ossmax/set_family.hpp"

#include <cmath>
#include <string>

#include "ossmax/errors.hpp"
#include "ossmax/tolerances.hpp"

namespace ossmax {

double WeightedSetFamily::TotalWeight() const {
  double total = 0;
  for (const WeightedSet& entry : entries) total += entry.weight;
  return total;
}

std::vector<double> WeightedSetFamily::PointOf(int num_elements) const {
  std::vector<double> point(num_elements, 0.0);
  for (const WeightedSet& entry : entries) {
    for (int e : entry.set) point[e] += entry.weight;
  }
  return point;
}

nlohmann::json WeightedSetFamily::ToJson() const {
  nlohmann::json list = nlohmann::json::array();
  for (const WeightedSet& entry : entries) {
    list.push_back({{"weight", entry.weight}, {"set", entry.set}});
  }
  return {{"entries", list}};
}

WeightedSetFamily WeightedSetFamily::FromJson(const nlohmann::json& doc) {
  WeightedSetFamily family;
  try {
    for (const auto& entry : doc.at("entries")) {
      family.entries.push_back({entry.at("weight").get<double>(),
                                entry.at("set").get<Subset>()});
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed decomposition: ") + e.what());
  }
  return family;
}

void ValidateConvexIndependent(const Matroid& m, const WeightedSetFamily& f) {
  for (const WeightedSet& entry : f.entries) {
    if (entry.weight < 0) {
      throw InputError("negative weight in set family");
    }
    if (!m.IsIndependent(entry.set)) {
      throw InputError("set family contains a dependent set");
    }
  }
  if (std::abs(f.TotalWeight() - 1.0) > kIneqTol) {
    throw InputError("set family weights must sum to one, got " +
                     std::to_string(f.TotalWeight()));
  }
}

}  // namespace ossmax
