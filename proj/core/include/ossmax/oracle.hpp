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

#ifndef OSSMAX_ORACLE_HPP_
#define OSSMAX_ORACLE_HPP_

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ossmax/greedy.hpp"
#include "ossmax/instances.hpp"
#include "ossmax/matroid.hpp"
#include "ossmax/objective.hpp"
#include "ossmax/rng.hpp"

namespace ossmax {

struct BruteForceResult {
  Subset set;
  double value = 0;
};

// Exact discrete optimum over independent sets by scanning all subsets;
// ties go to the smaller bitmask. Limited to n <= 16.
BruteForceResult BruteForceDiscreteOpt(const FirstOrderObjective& f,
                                       const Matroid& m);

// Same optimum via depth-first enumeration of independent sets only; kept as
// an independent implementation to cross-check the scan.
BruteForceResult BruteForceByEnumeration(const FirstOrderObjective& f,
                                         const Matroid& m);

// Exhaustive membership test for the independence polytope, n <= 10.
bool CheckInPolytope(const Matroid& m, const std::vector<double>& x);

struct VerificationReport {
  std::string check;
  bool passed = false;
  double worst_violation = 0;
  int trials = 0;
  std::string witness;  // context of the worst case, empty when clean

  nlohmann::json ToJson() const;
};

// Smoothness level at which the direction-wise inequalities are certified.
// The triple scan behind EstimateSigma only sees distinct triples, but the
// semi-metric inequality with a repeated index already forces sigma >= 1 for
// any non-zero matrix, so the certified level never sits below one.
double CertifiedOssSigma(const QuadraticObjective& q);

// Random (x, u, eps) draws of the gradient growth inequality at the given
// smoothness level.
VerificationReport VerifyGradientGrowth(const FirstOrderObjective& f,
                                        double sigma, int trials,
                                        std::uint64_t seed);

// Direction-wise and pointwise smoothness checks on random non-negative
// points with quantitative margins.
VerificationReport VerifyOssChecks(const QuadraticObjective& q, double sigma,
                                   int trials, std::uint64_t seed);

// Full pipeline on one instance against the brute-force optimum: greedy
// certificate, rounding certificate, and their composition. n <= 14.
VerificationReport VerifyEndToEnd(const Instance& instance,
                                  const GreedyConfig& cfg);

// Named batches of reports: "lemmas", "rounding", "endtoend", or "all".
std::vector<VerificationReport> VerifySuite(const std::string& suite,
                                            std::uint64_t seed);

// Random inputs shared by the verification suites and tests.

enum class MatroidFamily { kUniform, kPartition, kGraphic, kPaired };

extern const std::vector<MatroidFamily> kAllMatroidFamilies;

std::string MatroidFamilyName(MatroidFamily family);

// Random matroid with n <= 12 and rank >= min_rank; with wide_circuits the
// smallest circuit is known and has at least three elements.
std::unique_ptr<Matroid> RandomMatroid(MatroidFamily family, SplitMix64& rng,
                                       int min_rank = 1,
                                       bool wide_circuits = false);

// Symmetric non-negative scores with zero diagonal and non-negative linear
// part, entries uniform in [0, 1).
QuadraticObjective RandomDiversityObjective(int n, SplitMix64& rng);

// Convex combination of random bases with weights bounded away from zero.
WeightedSetFamily RandomBasisDecomposition(const Matroid& m, int count,
                                           SplitMix64& rng);

}  // namespace ossmax

#endif  // OSSMAX_ORACLE_HPP_
