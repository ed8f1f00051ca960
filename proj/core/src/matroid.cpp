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

#include "ossmax/matroid.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <string>

#include "ossmax/errors.hpp"

namespace ossmax {

namespace {

std::string Describe(const Subset& s) {
  std::string out = "{";
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "}";
}

Subset MaskToSubset(std::uint32_t mask) {
  Subset s;
  for (int e = 0; mask; ++e, mask >>= 1) {
    if (mask & 1u) s.push_back(e);
  }
  return s;
}

}  // namespace

Subset NormalizeSubset(Subset s, int num_elements) {
  std::sort(s.begin(), s.end());
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 0 || s[i] >= num_elements) {
      throw InputError("element " + std::to_string(s[i]) +
                       " outside ground set of size " +
                       std::to_string(num_elements));
    }
    if (i > 0 && s[i] == s[i - 1]) {
      throw InputError("duplicate element " + std::to_string(s[i]) +
                       " in subset");
    }
  }
  return s;
}

Subset SetMinus(const Subset& a, const Subset& b) {
  Subset out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

Subset SetIntersect(const Subset& a, const Subset& b) {
  Subset out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

Subset SetUnion(const Subset& a, const Subset& b) {
  Subset out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

bool SubsetContains(const Subset& s, int e) {
  return std::binary_search(s.begin(), s.end(), e);
}

Matroid::Matroid(int num_elements) : num_elements_(num_elements) {
  if (num_elements < 1) throw InputError("matroid needs a non-empty ground set");
}

void Matroid::InitCache() {
  Subset basis;
  for (int e = 0; e < num_elements_; ++e) {
    basis.push_back(e);
    if (!DoIsIndependent(basis)) basis.pop_back();
  }
  rank_ = static_cast<int>(basis.size());
  min_circuit_size_ = ComputeMinCircuitSize();
}

bool Matroid::IsIndependent(const Subset& s) const {
  return DoIsIndependent(NormalizeSubset(s, num_elements_));
}

int Matroid::SubsetRank(const Subset& s) const {
  const Subset sorted = NormalizeSubset(s, num_elements_);
  Subset current;
  for (int e : sorted) {
    current.push_back(e);
    if (!DoIsIndependent(current)) current.pop_back();
  }
  return static_cast<int>(current.size());
}

Subset Matroid::MaxWeightIndependent(const std::vector<double>& weights) const {
  if (static_cast<int>(weights.size()) != num_elements_) {
    throw InputError("weight vector size mismatch");
  }
  std::vector<int> order;
  for (int e = 0; e < num_elements_; ++e) {
    if (weights[e] > 0) order.push_back(e);
  }
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return weights[a] > weights[b];
  });
  Subset picked;
  for (int e : order) {
    Subset trial = picked;
    trial.insert(std::lower_bound(trial.begin(), trial.end(), e), e);
    if (DoIsIndependent(trial)) picked = std::move(trial);
  }
  return picked;
}

Subset Matroid::ExtendToBasis(const Subset& s,
                              const std::optional<Subset>& pool) const {
  Subset current = NormalizeSubset(s, num_elements_);
  if (!DoIsIndependent(current)) {
    throw InputError("cannot extend dependent set " + Describe(current));
  }
  Subset candidates;
  if (pool.has_value()) {
    candidates = NormalizeSubset(*pool, num_elements_);
  } else {
    candidates.resize(num_elements_);
    std::iota(candidates.begin(), candidates.end(), 0);
  }
  for (int e : candidates) {
    if (SubsetContains(current, e)) continue;
    Subset trial = current;
    trial.insert(std::lower_bound(trial.begin(), trial.end(), e), e);
    if (DoIsIndependent(trial)) current = std::move(trial);
  }
  return current;
}

UniformMatroid::UniformMatroid(int num_elements, int max_size)
    : Matroid(num_elements), max_size_(max_size) {
  if (max_size < 0 || max_size > num_elements) {
    throw InputError("uniform matroid needs 0 <= r <= n");
  }
  InitCache();
}

bool UniformMatroid::DoIsIndependent(const Subset& sorted) const {
  return static_cast<int>(sorted.size()) <= max_size_;
}

std::optional<int> UniformMatroid::ComputeMinCircuitSize() const {
  if (max_size_ >= NumElements()) return std::nullopt;
  return max_size_ + 1;
}

nlohmann::json UniformMatroid::ToJson() const {
  return {{"type", "uniform"}, {"n", NumElements()}, {"r", max_size_}};
}

std::unique_ptr<Matroid> UniformMatroid::Clone() const {
  return std::make_unique<UniformMatroid>(NumElements(), max_size_);
}

PartitionMatroid::PartitionMatroid(int num_elements, std::vector<Block> blocks)
    : Matroid(num_elements), blocks_(std::move(blocks)) {
  block_of_.assign(num_elements, -1);
  for (size_t bi = 0; bi < blocks_.size(); ++bi) {
    Block& block = blocks_[bi];
    if (block.capacity < 1) {
      throw InputError("block capacity must be positive");
    }
    block.elements = NormalizeSubset(block.elements, num_elements);
    for (int e : block.elements) {
      if (block_of_[e] != -1) {
        throw InputError("element " + std::to_string(e) +
                         " appears in two blocks");
      }
      block_of_[e] = static_cast<int>(bi);
    }
  }
  InitCache();
}

bool PartitionMatroid::DoIsIndependent(const Subset& sorted) const {
  std::vector<int> used(blocks_.size(), 0);
  for (int e : sorted) {
    const int bi = block_of_[e];
    if (bi >= 0 && ++used[bi] > blocks_[bi].capacity) return false;
  }
  return true;
}

std::optional<int> PartitionMatroid::ComputeMinCircuitSize() const {
  std::optional<int> best;
  for (const Block& block : blocks_) {
    if (static_cast<int>(block.elements.size()) > block.capacity) {
      const int candidate = block.capacity + 1;
      if (!best || candidate < *best) best = candidate;
    }
  }
  return best;
}

nlohmann::json PartitionMatroid::ToJson() const {
  nlohmann::json blocks = nlohmann::json::array();
  for (const Block& block : blocks_) {
    blocks.push_back(
        {{"elements", block.elements}, {"capacity", block.capacity}});
  }
  return {{"type", "partition"}, {"blocks", blocks}};
}

std::unique_ptr<Matroid> PartitionMatroid::Clone() const {
  return std::make_unique<PartitionMatroid>(NumElements(), blocks_);
}

GraphicMatroid::GraphicMatroid(int num_vertices,
                               std::vector<std::pair<int, int>> edges)
    : Matroid(static_cast<int>(edges.size())),
      num_vertices_(num_vertices),
      edges_(std::move(edges)) {
  if (num_vertices < 0) throw InputError("negative vertex count");
  for (const auto& [u, v] : edges_) {
    if (u < 0 || u >= num_vertices || v < 0 || v >= num_vertices) {
      throw InputError("edge endpoint outside vertex range");
    }
  }
  InitCache();
}

bool GraphicMatroid::DoIsIndependent(const Subset& sorted) const {
  // Union-find cycle detection; a self-loop is a cycle by itself.
  std::vector<int> parent(num_vertices_);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (int e : sorted) {
    const int ru = find(edges_[e].first);
    const int rv = find(edges_[e].second);
    if (ru == rv) return false;
    parent[ru] = rv;
  }
  return true;
}

std::optional<int> GraphicMatroid::ComputeMinCircuitSize() const {
  // Girth: for every edge, length of the shortest path between its endpoints
  // that avoids the edge itself, plus one. Handles parallel edges (girth 2)
  // and self-loops (girth 1).
  std::vector<std::vector<std::pair<int, int>>> adj(num_vertices_);
  for (size_t e = 0; e < edges_.size(); ++e) {
    const auto& [u, v] = edges_[e];
    adj[u].push_back({v, static_cast<int>(e)});
    if (u != v) adj[v].push_back({u, static_cast<int>(e)});
  }
  std::optional<int> best;
  for (size_t e = 0; e < edges_.size(); ++e) {
    const auto& [u, v] = edges_[e];
    if (u == v) return 1;
    std::vector<int> dist(num_vertices_, -1);
    std::deque<int> queue;
    dist[u] = 0;
    queue.push_back(u);
    while (!queue.empty() && dist[v] == -1) {
      const int at = queue.front();
      queue.pop_front();
      for (const auto& [to, via] : adj[at]) {
        if (via == static_cast<int>(e) || dist[to] != -1) continue;
        dist[to] = dist[at] + 1;
        queue.push_back(to);
      }
    }
    if (dist[v] != -1) {
      const int cycle = dist[v] + 1;
      if (!best || cycle < *best) best = cycle;
    }
  }
  return best;
}

nlohmann::json GraphicMatroid::ToJson() const {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [u, v] : edges_) edges.push_back({u, v});
  return {{"type", "graphic"}, {"vertices", num_vertices_}, {"edges", edges}};
}

std::unique_ptr<Matroid> GraphicMatroid::Clone() const {
  return std::make_unique<GraphicMatroid>(num_vertices_, edges_);
}

PairedCircuitMatroid::PairedCircuitMatroid(int num_pairs, int pair_budget)
    : Matroid(2 * num_pairs), num_pairs_(num_pairs), pair_budget_(pair_budget) {
  if (num_pairs < 1 || pair_budget < 1 || pair_budget > num_pairs) {
    throw InputError("paired matroid needs 1 <= t <= k");
  }
  InitCache();
}

bool PairedCircuitMatroid::DoIsIndependent(const Subset& sorted) const {
  int full_pairs = 0;
  for (size_t i = 0; i + 1 < sorted.size(); ++i) {
    if (sorted[i] % 2 == 0 && sorted[i + 1] == sorted[i] + 1) ++full_pairs;
  }
  return full_pairs <= pair_budget_ - 1;
}

std::optional<int> PairedCircuitMatroid::ComputeMinCircuitSize() const {
  // A circuit is a union of exactly t pairs.
  return 2 * pair_budget_;
}

nlohmann::json PairedCircuitMatroid::ToJson() const {
  return {{"type", "paired"}, {"k", num_pairs_}, {"t", pair_budget_}};
}

std::unique_ptr<Matroid> PairedCircuitMatroid::Clone() const {
  return std::make_unique<PairedCircuitMatroid>(num_pairs_, pair_budget_);
}

ExplicitMatroid::ExplicitMatroid(int num_elements,
                                 const std::vector<Subset>& independent)
    : Matroid(num_elements) {
  if (num_elements > 16) {
    throw InputError("explicit matroid limited to 16 elements");
  }
  masks_.reserve(independent.size());
  for (const Subset& s : independent) {
    std::uint32_t mask = 0;
    for (int e : NormalizeSubset(s, num_elements)) mask |= 1u << e;
    masks_.push_back(mask);
  }
  std::sort(masks_.begin(), masks_.end());
  masks_.erase(std::unique(masks_.begin(), masks_.end()), masks_.end());
  InitCache();
}

bool ExplicitMatroid::DoIsIndependent(const Subset& sorted) const {
  std::uint32_t mask = 0;
  for (int e : sorted) mask |= 1u << e;
  return std::binary_search(masks_.begin(), masks_.end(), mask);
}

std::optional<int> ExplicitMatroid::ComputeMinCircuitSize() const {
  std::optional<int> best;
  const std::uint32_t limit = 1u << NumElements();
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    if (std::binary_search(masks_.begin(), masks_.end(), mask)) continue;
    const int size = std::popcount(mask);
    if (!best || size < *best) best = size;
  }
  return best;
}

nlohmann::json ExplicitMatroid::ToJson() const {
  nlohmann::json sets = nlohmann::json::array();
  for (std::uint32_t mask : masks_) sets.push_back(MaskToSubset(mask));
  return {{"type", "explicit"}, {"n", NumElements()}, {"independent", sets}};
}

std::unique_ptr<Matroid> ExplicitMatroid::Clone() const {
  std::vector<Subset> sets;
  sets.reserve(masks_.size());
  for (std::uint32_t mask : masks_) sets.push_back(MaskToSubset(mask));
  return std::make_unique<ExplicitMatroid>(NumElements(), sets);
}

std::pair<int, int> FindExchangePair(const Matroid& m, const Subset& a,
                                     const Subset& b) {
  const Subset sa = NormalizeSubset(a, m.NumElements());
  const Subset sb = NormalizeSubset(b, m.NumElements());
  if (static_cast<int>(sa.size()) != m.Rank() ||
      static_cast<int>(sb.size()) != m.Rank() || !m.IsIndependent(sa) ||
      !m.IsIndependent(sb)) {
    throw InputError("exchange requires two bases");
  }
  const Subset only_a = SetMinus(sa, sb);
  const Subset only_b = SetMinus(sb, sa);
  for (int i : only_a) {
    for (int j : only_b) {
      Subset a_swapped = SetMinus(sa, {i});
      a_swapped.insert(
          std::lower_bound(a_swapped.begin(), a_swapped.end(), j), j);
      if (!m.IsIndependent(a_swapped)) continue;
      Subset b_swapped = SetMinus(sb, {j});
      b_swapped.insert(
          std::lower_bound(b_swapped.begin(), b_swapped.end(), i), i);
      if (m.IsIndependent(b_swapped)) return {i, j};
    }
  }
  throw NoExchangePairError("no symmetric exchange between " + Describe(sa) +
                            " and " + Describe(sb));
}

bool VerifyMatroidAxioms(const Matroid& m) {
  const int n = m.NumElements();
  if (n > 12) throw InputError("axiom check limited to 12 elements");
  const std::uint32_t limit = 1u << n;
  std::vector<bool> independent(limit);
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    independent[mask] = m.IsIndependent(MaskToSubset(mask));
  }
  if (!independent[0]) return false;
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    if (!independent[mask]) continue;
    for (std::uint32_t rest = mask; rest; rest &= rest - 1) {
      const std::uint32_t without = mask ^ (rest & -rest);
      if (!independent[without]) return false;
    }
  }
  for (std::uint32_t small = 0; small < limit; ++small) {
    if (!independent[small]) continue;
    const int small_size = std::popcount(small);
    for (std::uint32_t big = 0; big < limit; ++big) {
      if (!independent[big] || std::popcount(big) <= small_size) continue;
      bool extended = false;
      for (std::uint32_t rest = big & ~small; rest; rest &= rest - 1) {
        if (independent[small | (rest & -rest)]) {
          extended = true;
          break;
        }
      }
      if (!extended) return false;
    }
  }
  return true;
}

std::unique_ptr<Matroid> ParseMatroid(const nlohmann::json& spec,
                                      int num_elements) {
  try {
    const std::string type = spec.at("type").get<std::string>();
    if (type == "uniform") {
      const int n = spec.at("n").get<int>();
      if (n != num_elements) {
        throw InputError("matroid ground set size does not match instance");
      }
      return std::make_unique<UniformMatroid>(n, spec.at("r").get<int>());
    }
    if (type == "partition") {
      std::vector<PartitionMatroid::Block> blocks;
      for (const auto& entry : spec.at("blocks")) {
        blocks.push_back({entry.at("elements").get<Subset>(),
                          entry.at("capacity").get<int>()});
      }
      return std::make_unique<PartitionMatroid>(num_elements,
                                                std::move(blocks));
    }
    if (type == "graphic") {
      std::vector<std::pair<int, int>> edges;
      for (const auto& edge : spec.at("edges")) {
        edges.push_back({edge.at(0).get<int>(), edge.at(1).get<int>()});
      }
      if (static_cast<int>(edges.size()) != num_elements) {
        throw InputError("matroid ground set size does not match instance");
      }
      return std::make_unique<GraphicMatroid>(spec.at("vertices").get<int>(),
                                              std::move(edges));
    }
    if (type == "paired") {
      const int k = spec.at("k").get<int>();
      if (2 * k != num_elements) {
        throw InputError("matroid ground set size does not match instance");
      }
      return std::make_unique<PairedCircuitMatroid>(k, spec.at("t").get<int>());
    }
    if (type == "explicit") {
      const int n = spec.at("n").get<int>();
      if (n != num_elements) {
        throw InputError("matroid ground set size does not match instance");
      }
      return std::make_unique<ExplicitMatroid>(
          n, spec.at("independent").get<std::vector<Subset>>());
    }
    throw InputError("unknown matroid type: " + type);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed matroid description: ") + e.what());
  }
}

}  // namespace ossmax
