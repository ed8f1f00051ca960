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

#include "ossmax/rounding.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <string>

#include "ossmax/errors.hpp"
#include "ossmax/tolerances.hpp"

namespace ossmax {

namespace {

void ValidateBasisDecomposition(const Matroid& m,
                                const WeightedSetFamily& family) {
  ValidateConvexIndependent(m, family);
  for (const WeightedSet& entry : family.entries) {
    if (static_cast<int>(entry.set.size()) != m.Rank()) {
      throw InputError("decomposition entry is not a basis");
    }
  }
}

// Sum of A between element e and a set, skipping one excluded element.
double RowAgainst(const Matrix& a, int e, const Subset& s, int excluded) {
  double total = 0;
  for (int other : s) {
    if (other != excluded) total += a[e][other];
  }
  return total;
}

Subset ReplaceElement(const Subset& s, int out, int in) {
  Subset result = SetMinus(s, {out});
  result.insert(std::lower_bound(result.begin(), result.end(), in), in);
  return result;
}

}  // namespace

WeightedSetFamily SaturateToBases(const Matroid& m,
                                  const WeightedSetFamily& family) {
  ValidateConvexIndependent(m, family);
  WeightedSetFamily bases;
  std::map<Subset, size_t> seen;
  for (const WeightedSet& entry : family.entries) {
    Subset basis = m.ExtendToBasis(entry.set);
    auto [it, inserted] = seen.try_emplace(basis, bases.entries.size());
    if (inserted) {
      bases.entries.push_back({entry.weight, std::move(basis)});
    } else {
      bases.entries[it->second].weight += entry.weight;
    }
  }
  return bases;
}

QuadraticCoverage BuildQuadraticCoverage(const Matroid& m,
                                         const WeightedSetFamily& bases) {
  ValidateBasisDecomposition(m, bases);
  const std::optional<int> circuit = m.MinCircuitSize();
  if (!circuit || *circuit < 3) {
    throw CircuitTooSmallError(
        "coverage rounding needs every circuit to have >= 3 elements");
  }
  const int c = *circuit;
  const int r = m.Rank();
  const int block_size = (c - 1) / 2;
  const int n = m.NumElements();

  QuadraticCoverage cov;
  cov.source_point = bases.PointOf(n);

  for (const WeightedSet& entry : bases.entries) {
    cov.family.entries.push_back(
        {entry.weight * entry.weight, entry.set});
  }

  const double pair_budget =
      2.0 * (2.0 + 2.0 * static_cast<double>(r) / (c - 2));
  for (size_t i = 0; i < bases.entries.size(); ++i) {
    if (bases.entries[i].weight < kTinyWeight) continue;
    for (size_t j = i + 1; j < bases.entries.size(); ++j) {
      if (bases.entries[j].weight < kTinyWeight) continue;
      const double w = bases.entries[i].weight * bases.entries[j].weight;
      const Subset& first = bases.entries[i].set;
      const Subset& second = bases.entries[j].set;
      const Subset shared = SetIntersect(first, second);
      const Subset only_first = SetMinus(first, second);
      const Subset only_second = SetMinus(second, first);
      int pair_sets = 0;
      if (!shared.empty()) {
        cov.family.entries.push_back({w, first});
        cov.family.entries.push_back({w, second});
        pair_sets += 2;
      }
      // Split the second basis's private part into blocks small enough that
      // a block plus a same-sized leftover stays below the circuit size.
      for (size_t at = 0; at < only_second.size(); at += block_size) {
        const Subset block(
            only_second.begin() + at,
            only_second.begin() +
                std::min(at + block_size, only_second.size()));
        const Subset filled = m.ExtendToBasis(block, only_first);
        const Subset leftover = SetMinus(only_first, filled);
        if (static_cast<int>(leftover.size()) > block_size) {
          throw CoverageConditionError(
              "leftover block larger than expected: " +
              std::to_string(leftover.size()) + " > " +
              std::to_string(block_size));
        }
        cov.max_leftover =
            std::max(cov.max_leftover, static_cast<int>(leftover.size()));
        const Subset complement = SetUnion(leftover, block);
        if (!m.IsIndependent(complement)) {
          throw CoverageConditionError(
              "coverage produced a dependent set");
        }
        cov.family.entries.push_back({w, filled});
        cov.family.entries.push_back({w, complement});
        pair_sets += 2;
      }
      if (pair_sets > pair_budget + kIneqTol) {
        throw CoverageConditionError(
            "pair family exceeded its size budget");
      }
      cov.max_pair_sets = std::max(cov.max_pair_sets, pair_sets);
    }
  }

  cov.total_weight = cov.family.TotalWeight();
  const double weight_budget = 3.0 + 2.0 * static_cast<double>(r) / (c - 2);
  if (cov.total_weight > weight_budget + kIneqTol) {
    throw CoverageConditionError("coverage weight " +
                                 std::to_string(cov.total_weight) +
                                 " exceeds budget " +
                                 std::to_string(weight_budget));
  }

  // Certify the pairwise and singleton covering inequalities directly.
  std::vector<double> singleton(n, 0.0);
  std::vector<std::vector<double>> pairwise(n, std::vector<double>(n, 0.0));
  for (const WeightedSet& entry : cov.family.entries) {
    for (size_t a = 0; a < entry.set.size(); ++a) {
      singleton[entry.set[a]] += entry.weight;
      for (size_t b = a + 1; b < entry.set.size(); ++b) {
        pairwise[entry.set[a]][entry.set[b]] += entry.weight;
      }
    }
  }
  for (int u = 0; u < n; ++u) {
    if (singleton[u] < cov.source_point[u] - kIneqTol) {
      throw CoverageConditionError("singleton coverage short at " +
                                   std::to_string(u));
    }
    for (int v = u + 1; v < n; ++v) {
      if (pairwise[u][v] <
          cov.source_point[u] * cov.source_point[v] - kIneqTol) {
        throw CoverageConditionError("pair coverage short at (" +
                                     std::to_string(u) + "," +
                                     std::to_string(v) + ")");
      }
    }
  }
  return cov;
}

RoundedSet RoundByCoverage(const QuadraticObjective& q,
                           const QuadraticCoverage& coverage) {
  if (!q.IsDiversity()) {
    throw InputError("coverage rounding needs a diversity objective");
  }
  if (coverage.family.entries.empty()) {
    throw InputError("empty coverage family");
  }
  RoundedSet out;
  out.method = "coverage";
  out.gap_certificate = coverage.total_weight;
  double average = 0;
  bool have_best = false;
  for (const WeightedSet& entry : coverage.family.entries) {
    const double value = q.ValueOfSet(entry.set);
    average += entry.weight * value;
    if (!have_best || value > out.value) {
      out.set = entry.set;
      out.value = value;
      have_best = true;
    }
  }
  const double source_value = q.Value(coverage.source_point);
  if (average < source_value - kIneqTol) {
    throw CoverageConditionError(
        "weighted family value fails to dominate the fractional value");
  }
  if (out.value * coverage.total_weight < source_value - kIneqTol) {
    throw CoverageConditionError("coverage certificate failed to verify");
  }
  return out;
}

MergeResult MergeBases(const QuadraticObjective& q, const Matroid& m,
                       const WeightedSetFamily& family) {
  if (family.entries.size() < 2) {
    throw InputError("merge needs at least two entries");
  }
  ValidateBasisDecomposition(m, family);
  const Matrix& a = q.A();
  const double w1 = family.entries[0].weight;
  const double w2 = family.entries[1].weight;
  Subset first = family.entries[0].set;
  Subset second = family.entries[1].set;

  auto current_point = [&] {
    WeightedSetFamily state = family;
    state.entries[0].set = first;
    state.entries[1].set = second;
    return state.PointOf(q.Size());
  };

  MergeResult result;
  double value_before = q.Value(current_point());
  while (first != second) {
    const auto [i, j] = FindExchangePair(m, first, second);
    double margin_i = q.B()[i] + w1 * RowAgainst(a, i, first, i) +
                      w2 * RowAgainst(a, i, second, j);
    double margin_j = q.B()[j] + w1 * RowAgainst(a, j, first, i) +
                      w2 * RowAgainst(a, j, second, j);
    for (size_t k = 2; k < family.entries.size(); ++k) {
      const double wk = family.entries[k].weight;
      margin_i += wk * RowAgainst(a, i, family.entries[k].set, -1);
      margin_j += wk * RowAgainst(a, j, family.entries[k].set, -1);
    }
    if (margin_i >= margin_j) {
      second = ReplaceElement(second, j, i);
    } else {
      first = ReplaceElement(first, i, j);
    }
    result.matching.push_back({i, j});

    const double value_after = q.Value(current_point());
    const double violation = value_before - value_after - w1 * w2 * a[i][j];
    result.worst_step_violation =
        std::max(result.worst_step_violation, violation);
    if (violation > kIneqTol) {
      throw VerificationError(
          "merge step lost more than the swapped pair allows: " +
          std::to_string(violation));
    }
    value_before = value_after;
  }
  result.merged = first;
  return result;
}

SwapRoundResult SwapRound(const QuadraticObjective& q, const Matroid& m,
                          const WeightedSetFamily& bases, double sigma) {
  if (!q.IsDiversity()) {
    throw InputError("swap rounding needs a diversity objective");
  }
  if (sigma < 0) throw InputError("sigma must be non-negative");
  ValidateBasisDecomposition(m, bases);
  if (bases.entries.empty()) throw InputError("empty decomposition");

  SwapRoundResult out;
  if (bases.entries.size() == 1) {
    out.set = bases.entries[0].set;
    out.value = q.ValueOfSet(out.set);
    out.gap_certificate = 1.0;
    return out;
  }
  const int r = m.Rank();
  if (r < 2) {
    throw InputError("swap rounding needs rank >= 2");
  }

  // Sequentially fold the decomposition left to right, remembering each
  // pre-merge state so the heaviest stage can be replayed.
  const size_t p = bases.entries.size();
  std::vector<Subset> stage_basis;  // merged basis entering each stage
  std::vector<double> stage_weight;
  stage_basis.push_back(bases.entries[0].set);
  stage_weight.push_back(bases.entries[0].weight);
  double worst = 0;
  for (size_t k = 0; k + 1 < p; ++k) {
    WeightedSetFamily stage;
    stage.entries.push_back({stage_weight[k], stage_basis[k]});
    for (size_t rest = k + 1; rest < p; ++rest) {
      stage.entries.push_back(bases.entries[rest]);
    }
    MergeResult merged = MergeBases(q, m, stage);
    worst = std::max(worst, merged.worst_step_violation);
    out.matchings.push_back(std::move(merged.matching));
    stage_basis.push_back(std::move(merged.merged));
    stage_weight.push_back(stage_weight[k] + bases.entries[k + 1].weight);
  }

  double heaviest_mass = -1;
  for (size_t k = 0; k < out.matchings.size(); ++k) {
    double mass = 0;
    for (const auto& [i, j] : out.matchings[k]) mass += q.A()[i][j];
    if (mass > heaviest_mass) {
      heaviest_mass = mass;
      out.heaviest_matching = static_cast<int>(k);
    }
  }

  // Replay the heaviest stage at equal weights; high-A pairs then count half
  // each way, which is what the certificate needs.
  WeightedSetFamily replay;
  replay.entries.push_back(
      {0.5, stage_basis[out.heaviest_matching]});
  replay.entries.push_back(
      {0.5, bases.entries[out.heaviest_matching + 1].set});
  MergeResult alternative = MergeBases(q, m, replay);
  worst = std::max(worst, alternative.worst_step_violation);
  out.worst_step_violation = worst;

  const Subset& folded = stage_basis.back();
  const double folded_value = q.ValueOfSet(folded);
  const double alternative_value = q.ValueOfSet(alternative.merged);
  if (alternative_value >= folded_value) {
    out.set = alternative.merged;
    out.value = alternative_value;
  } else {
    out.set = folded;
    out.value = folded_value;
  }
  out.gap_certificate = 3.0 + 2.0 * sigma / (r - 1);

  const double fractional = q.Value(bases.PointOf(q.Size()));
  if (fractional > out.gap_certificate * out.value + kIneqTol) {
    throw VerificationError("swap rounding certificate failed to verify");
  }
  return out;
}

RoundBestResult RoundBest(const QuadraticObjective& q, const Matroid& m,
                          const WeightedSetFamily& bases, double sigma) {
  if (!q.IsDiversity()) {
    throw InputError("rounding needs a diversity objective");
  }
  ValidateBasisDecomposition(m, bases);
  const std::optional<int> circuit = m.MinCircuitSize();
  const bool coverage_applies = circuit.has_value() && *circuit >= 3;
  const bool swap_applies = bases.entries.size() == 1 || m.Rank() >= 2;
  if (!coverage_applies && !swap_applies) {
    throw InputError(
        "no rounding method applies: rank 1 with two-element circuits");
  }

  RoundBestResult out;
  double certificate = std::numeric_limits<double>::infinity();
  std::optional<RoundedSet> by_coverage;
  std::optional<SwapRoundResult> by_swap;
  if (coverage_applies) {
    by_coverage = RoundByCoverage(q, BuildQuadraticCoverage(m, bases));
    out.coverage_value = by_coverage->value;
    certificate = std::min(certificate, by_coverage->gap_certificate);
  }
  if (swap_applies) {
    by_swap = SwapRound(q, m, bases, sigma);
    out.swap_value = by_swap->value;
    certificate = std::min(certificate, by_swap->gap_certificate);
  }
  if (by_coverage && (!by_swap || by_coverage->value >= by_swap->value)) {
    out.set = by_coverage->set;
    out.value = by_coverage->value;
    out.method = "coverage";
  } else {
    out.set = by_swap->set;
    out.value = by_swap->value;
    out.method = "swap";
  }
  out.gap_certificate = certificate;
  return out;
}

WeightedSetFamily DecomposePoint(const Matroid& m,
                                 const std::vector<double>& x) {
  const int n = m.NumElements();
  if (n > 12) throw InputError("point decomposition limited to 12 elements");
  if (static_cast<int>(x.size()) != n) {
    throw InputError("point size mismatch");
  }
  std::vector<double> rest(x);
  for (double v : rest) {
    if (v < -kIneqTol || v > 1.0 + kIneqTol) {
      throw InputError("point outside the unit box");
    }
  }

  const std::uint32_t limit = 1u << n;
  std::vector<bool> independent(limit);
  std::vector<int> rank(limit, 0);
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    Subset s;
    for (int e = 0; e < n; ++e) {
      if (mask & (1u << e)) s.push_back(e);
    }
    independent[mask] = m.IsIndependent(s);
  }
  for (std::uint32_t mask = 1; mask < limit; ++mask) {
    std::uint32_t picked = 0;
    int count = 0;
    for (int e = 0; e < n; ++e) {
      const std::uint32_t bit = 1u << e;
      if ((mask & bit) && independent[picked | bit]) {
        picked |= bit;
        ++count;
      }
    }
    rank[mask] = count;
  }

  WeightedSetFamily out;
  double mass_left = 1.0;
  for (int round = 0; round < 1000; ++round) {
    std::uint32_t support = 0;
    for (int e = 0; e < n; ++e) {
      if (rest[e] > 1e-10) support |= 1u << e;
    }
    if (support == 0) {
      if (mass_left > 1e-10) out.entries.push_back({mass_left, {}});
      return out;
    }
    if (mass_left <= 1e-10) {
      throw VerificationError("point has more mass than the polytope allows");
    }

    // Per-subset sums of the remaining point, over the support.
    std::vector<double> subset_sum(limit, 0.0);
    for (std::uint32_t mask = support;; mask = (mask - 1) & support) {
      double total = 0;
      for (std::uint32_t bits = mask; bits; bits &= bits - 1) {
        total += rest[std::countr_zero(bits)];
      }
      subset_sum[mask] = total;
      if (mask == 0) break;
    }

    // Pick the independent set that can absorb the most mass while keeping
    // the remainder inside the shrunken polytope.
    double best_mass = -1;
    std::uint32_t best_set = 0;
    for (std::uint32_t cand = support;; cand = (cand - 1) & support) {
      if (independent[cand]) {
        double mass = mass_left;
        for (std::uint32_t bits = cand; bits; bits &= bits - 1) {
          mass = std::min(mass, rest[std::countr_zero(bits)]);
        }
        for (std::uint32_t t = support; t != 0; t = (t - 1) & support) {
          const int gap = rank[t] - std::popcount(cand & t);
          if (gap > 0) {
            mass = std::min(mass,
                            (mass_left * rank[t] - subset_sum[t]) / gap);
          }
        }
        if (mass > best_mass) {
          best_mass = mass;
          best_set = cand;
        }
      }
      if (cand == 0) break;
    }
    if (best_mass <= kTinyWeight) {
      throw VerificationError("point decomposition stalled");
    }
    Subset chosen;
    for (int e = 0; e < n; ++e) {
      if (best_set & (1u << e)) {
        chosen.push_back(e);
        rest[e] -= best_mass;
      }
    }
    out.entries.push_back({best_mass, std::move(chosen)});
    mass_left -= best_mass;
  }
  throw VerificationError("point decomposition did not converge");
}

}  // namespace ossmax
