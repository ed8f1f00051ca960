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

#include "ossmax/instances.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "ossmax/errors.hpp"

namespace ossmax {

namespace {

Matrix ZeroMatrix(int n) { return Matrix(n, std::vector<double>(n, 0.0)); }

std::vector<std::vector<double>> RandomPoints(int num_points, int dim,
                                              SplitMix64& rng) {
  std::vector<std::vector<double>> points(num_points,
                                          std::vector<double>(dim));
  for (auto& point : points) {
    for (double& coord : point) coord = rng.NextDouble();
  }
  return points;
}

Matrix PoweredDistances(const std::vector<std::vector<double>>& points,
                        double power) {
  const int n = static_cast<int>(points.size());
  Matrix a = ZeroMatrix(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      double squared = 0;
      for (size_t d = 0; d < points[i].size(); ++d) {
        const double diff = points[i][d] - points[j][d];
        squared += diff * diff;
      }
      a[i][j] = a[j][i] = std::pow(std::sqrt(squared), power);
    }
  }
  return a;
}

}  // namespace

QuadraticObjective GenGraphSemimetric(
    int num_vertices, const std::vector<std::pair<int, int>>& edges,
    double sigma0) {
  if (num_vertices < 1) throw InputError("graph needs at least one vertex");
  if (sigma0 < 1) throw InputError("graph scores need sigma0 >= 1");
  Matrix a = ZeroMatrix(num_vertices);
  for (int i = 0; i < num_vertices; ++i) {
    for (int j = 0; j < num_vertices; ++j) {
      if (i != j) a[i][j] = 1.0;
    }
  }
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= num_vertices || v < 0 || v >= num_vertices || u == v) {
      throw InputError("bad edge in graph scores");
    }
    a[u][v] = a[v][u] = 2.0 * sigma0;
  }
  return QuadraticObjective(std::move(a),
                            std::vector<double>(num_vertices, 0.0));
}

QuadraticObjective GenNegativeType(int num_points, int dim,
                                   std::uint64_t seed) {
  if (num_points < 1 || dim < 1) {
    throw InputError("point cloud needs positive size and dimension");
  }
  SplitMix64 rng(seed);
  return QuadraticObjective(
      PoweredDistances(RandomPoints(num_points, dim, rng), 2.0),
      std::vector<double>(num_points, 0.0));
}

QuadraticObjective GenPoweredMetric(int num_points, int dim, double p,
                                    std::uint64_t seed) {
  if (num_points < 1 || dim < 1) {
    throw InputError("point cloud needs positive size and dimension");
  }
  if (p < 1) throw InputError("power must be at least one");
  SplitMix64 rng(seed);
  return QuadraticObjective(
      PoweredDistances(RandomPoints(num_points, dim, rng), p),
      std::vector<double>(num_points, 0.0));
}

GapInstance GenGapInstance(int num_pairs, int pair_budget, double sigma0) {
  if (sigma0 < 1) throw InputError("gap instance needs sigma0 >= 1");
  auto matroid =
      std::make_unique<PairedCircuitMatroid>(num_pairs, pair_budget);
  const int n = 2 * num_pairs;
  Matrix a = ZeroMatrix(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const bool matched = (i / 2 == j / 2);
      a[i][j] = matched ? 1.0 : 1.0 / sigma0;
    }
  }

  GapInstance out{
      QuadraticObjective(std::move(a), std::vector<double>(n, 0.0)),
      std::move(matroid)};

  const double rank = num_pairs + pair_budget - 1;
  // Planted optimum: t-1 full pairs plus one element from every other pair.
  out.planted_value = (pair_budget - 1) +
                      (rank * (rank - 1) / 2.0 - (pair_budget - 1)) / sigma0;
  const double q = rank / n;
  out.fractional_point.assign(n, q);
  out.fractional_value =
      num_pairs * q * q * (1.0 + 2.0 * (num_pairs - 1) / sigma0);
  const double circuit = 2.0 * pair_budget;
  const double by_circuit =
      circuit > 2 ? rank / (circuit - 2)
                  : std::numeric_limits<double>::infinity();
  out.analytic_ratio_lb = 0.25 * std::min(by_circuit, sigma0 / rank);
  return out;
}

ProcurementObjective GenProcurement(int num_items, int num_factors,
                                    std::uint64_t seed, double bid_scale) {
  if (num_items < 1) throw InputError("procurement needs at least one item");
  if (num_factors < 0) throw InputError("negative factor count");
  if (bid_scale < 1) throw InputError("bid scale must be at least one");
  SplitMix64 rng(seed);
  const int n = num_items;
  Matrix collusion = ZeroMatrix(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      collusion[i][j] = collusion[j][i] = rng.NextDouble();
    }
  }
  Matrix g(num_factors, std::vector<double>(n));
  for (auto& row : g) {
    for (double& v : row) v = static_cast<double>(rng.NextInt(3) - 1);
  }
  // Bids sit exactly at bid_scale times the monotonicity threshold.
  Matrix c = ZeroMatrix(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double gram = 0;
      for (const auto& row : g) gram += row[i] * row[j];
      c[i][j] = collusion[i][j] + gram;
    }
  }
  std::vector<double> bids(n);
  for (int i = 0; i < n; ++i) {
    double positive_mass = 0;
    for (double v : c[i]) positive_mass += std::max(v, 0.0);
    bids[i] = bid_scale * (positive_mass + 1.0 / n);
  }
  return ProcurementObjective(std::move(collusion), std::move(g),
                              std::move(bids));
}

std::vector<std::pair<int, int>> GenRandomGraphEdges(int num_vertices,
                                                     double edge_prob,
                                                     SplitMix64& rng) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < num_vertices; ++u) {
    for (int v = u + 1; v < num_vertices; ++v) {
      if (rng.NextDouble() < edge_prob) edges.push_back({u, v});
    }
  }
  return edges;
}

int Instance::Size() const {
  return quadratic ? quadratic->Size() : procurement->Size();
}

const FirstOrderObjective& Instance::Objective() const {
  if (quadratic) return *quadratic;
  if (procurement) return *procurement;
  throw InputError("instance has no objective");
}

nlohmann::json Instance::ToJson() const {
  nlohmann::json doc;
  doc["matroid"] = matroid->ToJson();
  if (quadratic) {
    doc["objective"] = quadratic->ToJson();
  } else if (procurement) {
    doc["procurement"] = procurement->ToJson();
  } else {
    throw InputError("instance has no objective");
  }
  doc["meta"] = {{"generator", meta.generator},
                 {"parameters", meta.parameters},
                 {"seed", meta.seed}};
  return doc;
}

Instance Instance::FromJson(const nlohmann::json& doc) {
  Instance out;
  try {
    if (doc.contains("objective") == doc.contains("procurement")) {
      throw InputError(
          "instance needs exactly one of objective or procurement");
    }
    if (doc.contains("objective")) {
      out.quadratic = QuadraticObjective::FromJson(doc.at("objective"));
    } else {
      out.procurement = ProcurementObjective::FromJson(doc.at("procurement"));
    }
    out.matroid = ParseMatroid(doc.at("matroid"), out.Size());
    if (doc.contains("meta")) {
      const auto& meta = doc.at("meta");
      out.meta.generator = meta.value("generator", std::string());
      out.meta.parameters = meta.value("parameters", nlohmann::json::object());
      out.meta.seed = meta.value("seed", std::uint64_t{0});
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed instance: ") + e.what());
  }
  return out;
}

}  // namespace ossmax
