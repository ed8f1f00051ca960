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
#include <cstdint>
#include <memory>
#include <vector>

#include "doctest.h"
#include "ossmax/errors.hpp"
#include "ossmax/rng.hpp"

namespace ossmax {
namespace {

Subset MaskToSet(std::uint32_t mask) {
  Subset s;
  for (int e = 0; mask >> e; ++e) {
    if ((mask >> e) & 1u) s.push_back(e);
  }
  return s;
}

// Exhaustive reference for SubsetRank: the largest independent subset of s.
int NaiveSubsetRank(const Matroid& m, const Subset& s) {
  int best = 0;
  const int k = static_cast<int>(s.size());
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    Subset sub;
    for (int i = 0; i < k; ++i) {
      if ((mask >> i) & 1u) sub.push_back(s[i]);
    }
    if (m.IsIndependent(sub)) best = std::max(best, static_cast<int>(sub.size()));
  }
  return best;
}

// Exhaustive reference for MaxWeightIndependent over positive weights.
double NaiveMaxWeight(const Matroid& m, const std::vector<double>& w) {
  double best = 0;
  for (std::uint32_t mask = 0; mask < (1u << m.NumElements()); ++mask) {
    const Subset s = MaskToSet(mask);
    if (!m.IsIndependent(s)) continue;
    double total = 0;
    for (int e : s) total += std::max(w[e], 0.0);
    best = std::max(best, total);
  }
  return best;
}

double WeightOf(const Subset& s, const std::vector<double>& w) {
  double total = 0;
  for (int e : s) total += w[e];
  return total;
}

}  // namespace

TEST_CASE("subset helpers normalize and combine") {
  CHECK(NormalizeSubset({3, 1, 2}, 5) == Subset{1, 2, 3});
  CHECK_THROWS_AS(NormalizeSubset({1, 1}, 5), InputError);
  CHECK_THROWS_AS(NormalizeSubset({5}, 5), InputError);
  CHECK_THROWS_AS(NormalizeSubset({-1}, 5), InputError);
  CHECK(SetMinus({0, 1, 2}, {1}) == Subset{0, 2});
  CHECK(SetIntersect({0, 1, 2}, {1, 2, 3}) == Subset{1, 2});
  CHECK(SetUnion({0, 2}, {1, 2}) == Subset{0, 1, 2});
  CHECK(SubsetContains({0, 2, 4}, 2));
  CHECK_FALSE(SubsetContains({0, 2, 4}, 3));
}

TEST_CASE("uniform matroid rank and circuits") {
  UniformMatroid m(5, 2);
  CHECK(m.NumElements() == 5);
  CHECK(m.Rank() == 2);
  CHECK(m.MinCircuitSize() == 3);
  CHECK(m.IsIndependent({}));
  CHECK(m.IsIndependent({4, 0}));
  CHECK_FALSE(m.IsIndependent({0, 1, 2}));

  UniformMatroid free(3, 3);
  CHECK(free.Rank() == 3);
  CHECK_FALSE(free.MinCircuitSize().has_value());

  CHECK_THROWS_AS(UniformMatroid(0, 0), InputError);
  CHECK_THROWS_AS(UniformMatroid(3, 4), InputError);
}

TEST_CASE("partition matroid respects block capacities") {
  // Blocks {0,1,2} cap 1 and {3,4} cap 2; element 5 is free.
  PartitionMatroid m(6, {{{0, 1, 2}, 1}, {{3, 4}, 2}});
  CHECK(m.Rank() == 4);
  CHECK(m.MinCircuitSize() == 2);  // two elements of the capacity-1 block
  CHECK(m.IsIndependent({0, 3, 4, 5}));
  CHECK_FALSE(m.IsIndependent({0, 1}));
  CHECK(m.IsIndependent({2, 5}));

  // A saturated block contributes no circuit; free elements never do.
  PartitionMatroid loose(4, {{{0, 1}, 2}});
  CHECK(loose.Rank() == 4);
  CHECK_FALSE(loose.MinCircuitSize().has_value());

  CHECK_THROWS_AS(PartitionMatroid(4, {{{0, 1}, 1}, {{1, 2}, 1}}), InputError);
  CHECK_THROWS_AS(PartitionMatroid(4, {{{0, 1}, 0}}), InputError);
}

TEST_CASE("graphic matroid knows forests and girth") {
  // Square 0-1-2-3 plus the diagonal {0,2}: edges 0..4.
  GraphicMatroid m(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
  CHECK(m.NumElements() == 5);
  CHECK(m.Rank() == 3);
  CHECK(m.MinCircuitSize() == 3);  // triangle 0-1-2 via the diagonal
  CHECK(m.IsIndependent({0, 1, 2}));
  CHECK_FALSE(m.IsIndependent({0, 1, 4}));   // triangle
  CHECK_FALSE(m.IsIndependent({0, 1, 2, 3}));  // the square

  GraphicMatroid parallel(3, {{0, 1}, {0, 1}, {1, 2}});
  CHECK(parallel.Rank() == 2);
  CHECK(parallel.MinCircuitSize() == 2);

  GraphicMatroid loop(2, {{0, 0}, {0, 1}});
  CHECK(loop.Rank() == 1);
  CHECK(loop.MinCircuitSize() == 1);
  CHECK_FALSE(loop.IsIndependent({0}));

  GraphicMatroid forest(4, {{0, 1}, {2, 3}});
  CHECK(forest.Rank() == 2);
  CHECK_FALSE(forest.MinCircuitSize().has_value());
}

TEST_CASE("paired circuit matroid counts full pairs") {
  PairedCircuitMatroid m(3, 2);  // k = 3 pairs, budget t = 2
  CHECK(m.NumElements() == 6);
  CHECK(m.Rank() == 4);  // k + t - 1
  CHECK(m.MinCircuitSize() == 4);  // 2t
  CHECK(m.IsIndependent({0, 1}));            // one full pair allowed
  CHECK(m.IsIndependent({0, 2, 4}));         // no full pair
  CHECK(m.IsIndependent({0, 1, 2, 4}));      // rank-sized
  CHECK_FALSE(m.IsIndependent({0, 1, 2, 3}));  // two full pairs

  PairedCircuitMatroid tight(2, 1);  // every pair is a circuit
  CHECK(tight.Rank() == 2);
  CHECK(tight.MinCircuitSize() == 2);
  CHECK_FALSE(tight.IsIndependent({2, 3}));

  CHECK_THROWS_AS(PairedCircuitMatroid(2, 3), InputError);
  CHECK_THROWS_AS(PairedCircuitMatroid(0, 1), InputError);
}

TEST_CASE("explicit matroid stores the family verbatim") {
  ExplicitMatroid m(3, {{}, {0}, {1}, {2}, {0, 1}, {0, 2}});
  CHECK(m.Rank() == 2);
  CHECK(m.MinCircuitSize() == 2);  // {1, 2} is dependent, both singletons free
  CHECK(m.IsIndependent({0, 2}));
  CHECK_FALSE(m.IsIndependent({1, 2}));
  CHECK(VerifyMatroidAxioms(m));

  // Hereditary but not exchangeable: {0,1} and the lone {2} cannot trade.
  ExplicitMatroid bad(3, {{}, {0}, {1}, {2}, {0, 1}});
  CHECK_FALSE(VerifyMatroidAxioms(bad));

  // Missing the empty set breaks non-emptiness only if nothing else is there;
  // missing subsets break heredity.
  ExplicitMatroid gap(2, {{}, {0, 1}});
  CHECK_FALSE(VerifyMatroidAxioms(gap));
}

TEST_CASE("every family passes the axiom check") {
  CHECK(VerifyMatroidAxioms(UniformMatroid(6, 3)));
  CHECK(VerifyMatroidAxioms(PartitionMatroid(6, {{{0, 1, 2}, 2}, {{3, 4}, 1}})));
  CHECK(VerifyMatroidAxioms(
      GraphicMatroid(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}})));
  CHECK(VerifyMatroidAxioms(PairedCircuitMatroid(3, 2)));
}

TEST_CASE("subset rank matches the exhaustive reference") {
  std::vector<std::unique_ptr<Matroid>> pool;
  pool.push_back(std::make_unique<UniformMatroid>(6, 3));
  pool.push_back(
      std::make_unique<PartitionMatroid>(
          6, std::vector<PartitionMatroid::Block>{{{0, 1, 2}, 1}, {{3, 4}, 2}}));
  pool.push_back(std::make_unique<GraphicMatroid>(
      4, std::vector<std::pair<int, int>>{
             {0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {1, 3}}));
  pool.push_back(std::make_unique<PairedCircuitMatroid>(3, 2));
  for (const auto& m : pool) {
    for (std::uint32_t mask = 0; mask < (1u << m->NumElements()); ++mask) {
      const Subset s = MaskToSet(mask);
      CHECK(m->SubsetRank(s) == NaiveSubsetRank(*m, s));
    }
  }
}

TEST_CASE("matroid greedy is optimal for max weight") {
  SplitMix64 rng(7);
  std::vector<std::unique_ptr<Matroid>> pool;
  pool.push_back(std::make_unique<UniformMatroid>(7, 3));
  pool.push_back(
      std::make_unique<PartitionMatroid>(
          7, std::vector<PartitionMatroid::Block>{{{0, 1, 2}, 1}, {{3, 4, 5}, 2}}));
  pool.push_back(std::make_unique<GraphicMatroid>(
      5, std::vector<std::pair<int, int>>{
             {0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}}));
  pool.push_back(std::make_unique<PairedCircuitMatroid>(3, 1));
  for (const auto& m : pool) {
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<double> w(m->NumElements());
      for (double& v : w) v = rng.NextDouble() * 2 - 0.5;  // some negative
      const Subset s = m->MaxWeightIndependent(w);
      CHECK(m->IsIndependent(s));
      for (int e : s) CHECK(w[e] > 0);
      CHECK(WeightOf(s, w) == doctest::Approx(NaiveMaxWeight(*m, w)).epsilon(1e-12));
    }
  }
}

TEST_CASE("max weight greedy breaks ties toward lower indices") {
  UniformMatroid m(4, 2);
  CHECK(m.MaxWeightIndependent({1, 1, 1, 1}) == Subset{0, 1});
  CHECK(m.MaxWeightIndependent({0, -1, 0, 2}) == Subset{3});
}

TEST_CASE("extend to basis respects the candidate pool") {
  UniformMatroid m(5, 3);
  CHECK(m.ExtendToBasis({}) == Subset{0, 1, 2});
  CHECK(m.ExtendToBasis({4}) == Subset{0, 1, 4});
  CHECK(m.ExtendToBasis({4}, Subset{2, 3}) == Subset{2, 3, 4});
  // A short pool may stop early of a basis; the result is still independent.
  CHECK(m.ExtendToBasis({4}, Subset{2}) == Subset{2, 4});
  CHECK_THROWS_AS(m.ExtendToBasis({0, 1, 2, 3}), InputError);

  GraphicMatroid g(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}});
  CHECK(g.ExtendToBasis({2}) == Subset{0, 2, 3});  // edge 1 closes a triangle
}

TEST_CASE("exchange pairs keep both bases independent") {
  GraphicMatroid m(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
  const Subset a = {0, 1, 2};
  const Subset b = {1, 3, 4};
  const auto [i, j] = FindExchangePair(m, a, b);
  CHECK(SubsetContains(a, i));
  CHECK_FALSE(SubsetContains(b, i));
  CHECK(SubsetContains(b, j));
  CHECK_FALSE(SubsetContains(a, j));
  Subset a2 = SetUnion(SetMinus(a, {i}), {j});
  Subset b2 = SetUnion(SetMinus(b, {j}), {i});
  CHECK(m.IsIndependent(a2));
  CHECK(m.IsIndependent(b2));

  CHECK_THROWS_AS(FindExchangePair(m, a, a), NoExchangePairError);
}

TEST_CASE("exchange pairs exist for random distinct bases") {
  SplitMix64 rng(11);
  PairedCircuitMatroid m(4, 2);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<double> wa(m.NumElements()), wb(m.NumElements());
    for (double& v : wa) v = 0.1 + rng.NextDouble();
    for (double& v : wb) v = 0.1 + rng.NextDouble();
    const Subset a = m.MaxWeightIndependent(wa);
    const Subset b = m.MaxWeightIndependent(wb);
    if (a == b) continue;
    const auto [i, j] = FindExchangePair(m, a, b);
    CHECK(m.IsIndependent(SetUnion(SetMinus(a, {i}), {j})));
    CHECK(m.IsIndependent(SetUnion(SetMinus(b, {j}), {i})));
  }
}

TEST_CASE("matroid json round trips preserve behavior") {
  std::vector<std::unique_ptr<Matroid>> pool;
  pool.push_back(std::make_unique<UniformMatroid>(5, 2));
  pool.push_back(
      std::make_unique<PartitionMatroid>(
          6, std::vector<PartitionMatroid::Block>{{{0, 1, 2}, 1}, {{3, 4}, 2}}));
  pool.push_back(std::make_unique<GraphicMatroid>(
      4, std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}, {3, 0}}));
  pool.push_back(std::make_unique<PairedCircuitMatroid>(3, 2));
  pool.push_back(std::make_unique<ExplicitMatroid>(
      3, std::vector<Subset>{{}, {0}, {1}, {2}, {0, 1}, {0, 2}}));
  for (const auto& m : pool) {
    const auto parsed = ParseMatroid(m->ToJson(), m->NumElements());
    CHECK(parsed->TypeName() == m->TypeName());
    CHECK(parsed->NumElements() == m->NumElements());
    CHECK(parsed->Rank() == m->Rank());
    CHECK(parsed->MinCircuitSize() == m->MinCircuitSize());
    for (std::uint32_t mask = 0; mask < (1u << m->NumElements()); ++mask) {
      const Subset s = MaskToSet(mask);
      CHECK(parsed->IsIndependent(s) == m->IsIndependent(s));
    }
    // Clone must agree as well.
    const auto clone = m->Clone();
    CHECK(clone->ToJson() == m->ToJson());
  }
}

TEST_CASE("parse matroid rejects malformed input") {
  CHECK_THROWS_AS(ParseMatroid({{"type", "mystery"}}, 3), InputError);
  CHECK_THROWS_AS(ParseMatroid({{"n", 3}, {"r", 1}}, 3), InputError);
  // Encoded size must match the surrounding context.
  CHECK_THROWS_AS(
      ParseMatroid({{"type", "uniform"}, {"n", 4}, {"r", 2}}, 5), InputError);
}

}  // namespace ossmax
