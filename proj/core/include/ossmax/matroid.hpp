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

#ifndef OSSMAX_MATROID_HPP_
#define OSSMAX_MATROID_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace ossmax {

// A subset of the ground set {0, ..., n-1}, kept sorted ascending.
using Subset = std::vector<int>;

// Sorts, checks for duplicates and range violations. Throws InputError.
Subset NormalizeSubset(Subset s, int num_elements);

Subset SetMinus(const Subset& a, const Subset& b);
Subset SetIntersect(const Subset& a, const Subset& b);
Subset SetUnion(const Subset& a, const Subset& b);
bool SubsetContains(const Subset& s, int e);

// Independence system over {0, ..., n-1} with matroid operations layered on
// top of the independence oracle. Instances are immutable after construction
// and safe to share across threads for reads.
class Matroid {
 public:
  virtual ~Matroid() = default;

  int NumElements() const { return num_elements_; }

  // Rank of the full ground set.
  int Rank() const { return rank_; }

  // Size of the smallest circuit, or nullopt when the matroid is free (no
  // circuit exists) or the size is not tracked for this variant.
  std::optional<int> MinCircuitSize() const { return min_circuit_size_; }

  // Accepts any ordering; validates indices. Throws InputError on bad input.
  bool IsIndependent(const Subset& s) const;

  // Rank of a subset, computed by greedy augmentation in index order.
  int SubsetRank(const Subset& s) const;

  // Max-weight independent set by the standard matroid greedy. Elements with
  // weight <= 0 are never taken; ties are broken toward the lower index.
  Subset MaxWeightIndependent(const std::vector<double>& weights) const;

  // Grows s to a maximal independent set. Candidates come from pool when
  // given, otherwise from the whole ground set, scanned in ascending order.
  // Throws InputError if s is dependent.
  Subset ExtendToBasis(const Subset& s,
                       const std::optional<Subset>& pool = std::nullopt) const;

  virtual std::string TypeName() const = 0;
  virtual nlohmann::json ToJson() const = 0;
  virtual std::unique_ptr<Matroid> Clone() const = 0;

 protected:
  explicit Matroid(int num_elements);

  // Oracle on a sorted, validated subset.
  virtual bool DoIsIndependent(const Subset& sorted) const = 0;
  virtual std::optional<int> ComputeMinCircuitSize() const = 0;

  // Concrete constructors call this last, once the oracle is usable.
  void InitCache();

  bool IsIndependentSorted(const Subset& sorted) const {
    return DoIsIndependent(sorted);
  }

 private:
  int num_elements_;
  int rank_ = 0;
  std::optional<int> min_circuit_size_;
};

// All subsets of size at most r are independent.
class UniformMatroid final : public Matroid {
 public:
  UniformMatroid(int num_elements, int max_size);

  int MaxSize() const { return max_size_; }
  std::string TypeName() const override { return "uniform"; }
  nlohmann::json ToJson() const override;
  std::unique_ptr<Matroid> Clone() const override;

 protected:
  bool DoIsIndependent(const Subset& sorted) const override;
  std::optional<int> ComputeMinCircuitSize() const override;

 private:
  int max_size_;
};

// Disjoint blocks with per-block capacities; elements outside every block are
// unconstrained.
class PartitionMatroid final : public Matroid {
 public:
  struct Block {
    Subset elements;
    int capacity;
  };

  PartitionMatroid(int num_elements, std::vector<Block> blocks);

  const std::vector<Block>& Blocks() const { return blocks_; }
  std::string TypeName() const override { return "partition"; }
  nlohmann::json ToJson() const override;
  std::unique_ptr<Matroid> Clone() const override;

 protected:
  bool DoIsIndependent(const Subset& sorted) const override;
  std::optional<int> ComputeMinCircuitSize() const override;

 private:
  std::vector<Block> blocks_;
  std::vector<int> block_of_;  // element -> block index, -1 when free
};

// Ground set elements are edges of a multigraph; independent sets are
// forests. Parallel edges and self-loops are allowed.
class GraphicMatroid final : public Matroid {
 public:
  GraphicMatroid(int num_vertices, std::vector<std::pair<int, int>> edges);

  int NumVertices() const { return num_vertices_; }
  const std::vector<std::pair<int, int>>& Edges() const { return edges_; }
  std::string TypeName() const override { return "graphic"; }
  nlohmann::json ToJson() const override;
  std::unique_ptr<Matroid> Clone() const override;

 protected:
  bool DoIsIndependent(const Subset& sorted) const override;
  // Girth of the multigraph, via shortest alternative path per edge.
  std::optional<int> ComputeMinCircuitSize() const override;

 private:
  int num_vertices_;
  std::vector<std::pair<int, int>> edges_;
};

// Ground set {0, ..., 2k-1} grouped into pairs {2i, 2i+1}; a set is
// independent when it fully contains at most t-1 pairs. Rank k+t-1, smallest
// circuit 2t.
class PairedCircuitMatroid final : public Matroid {
 public:
  PairedCircuitMatroid(int num_pairs, int pair_budget);

  int NumPairs() const { return num_pairs_; }
  int PairBudget() const { return pair_budget_; }
  std::string TypeName() const override { return "paired"; }
  nlohmann::json ToJson() const override;
  std::unique_ptr<Matroid> Clone() const override;

 protected:
  bool DoIsIndependent(const Subset& sorted) const override;
  std::optional<int> ComputeMinCircuitSize() const override;

 private:
  int num_pairs_;    // k
  int pair_budget_;  // t
};

// Stores the full list of independent sets as bitmasks; limited to n <= 16.
// Construction does not verify the matroid axioms, VerifyMatroidAxioms does.
class ExplicitMatroid final : public Matroid {
 public:
  ExplicitMatroid(int num_elements, const std::vector<Subset>& independent);

  std::string TypeName() const override { return "explicit"; }
  nlohmann::json ToJson() const override;
  std::unique_ptr<Matroid> Clone() const override;

 protected:
  bool DoIsIndependent(const Subset& sorted) const override;
  std::optional<int> ComputeMinCircuitSize() const override;

 private:
  std::vector<std::uint32_t> masks_;  // sorted for binary search
};

// First (i, j) in ascending (i, j) order with i in a\b, j in b\a such that
// both a - i + j and b - j + i stay independent. Inputs must be bases.
// Throws NoExchangePairError when no pair exists.
std::pair<int, int> FindExchangePair(const Matroid& m, const Subset& a,
                                     const Subset& b);

// Exhaustive check of non-emptiness, heredity and the exchange axiom.
// Restricted to n <= 12.
bool VerifyMatroidAxioms(const Matroid& m);

// Builds a matroid from its JSON description. The expected ground set size
// comes from the surrounding context (a partition block list does not state
// it); variants that encode their own size are validated against it.
std::unique_ptr<Matroid> ParseMatroid(const nlohmann::json& spec,
                                      int num_elements);

}  // namespace ossmax

#endif  // OSSMAX_MATROID_HPP_
