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

#ifndef OSSMAX_OBJECTIVE_HPP_
#define OSSMAX_OBJECTIVE_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "ossmax/matroid.hpp"
#include "ossmax/set_family.hpp"

namespace ossmax {

using Matrix = std::vector<std::vector<double>>;

// Differentiable objective on [0,1]^n, the interface the greedy loop needs.
class FirstOrderObjective {
 public:
  virtual ~FirstOrderObjective() = default;

  virtual int Size() const = 0;
  virtual double Value(const std::vector<double>& x) const = 0;
  virtual std::vector<double> Gradient(const std::vector<double>& x) const = 0;

  // True when every third-order partial derivative is non-positive, which
  // unlocks the stronger jump-start guarantee. Quadratics qualify trivially.
  virtual bool HasNonPositiveThirdDerivatives() const = 0;

  // Value at the indicator vector of s.
  virtual double ValueOfSet(const Subset& s) const;
};

struct SigmaWitness {
  int i = 0;
  int j = 0;
  int k = 0;
};

struct SigmaCertificate {
  double sigma = 0;
  // Triple attaining the max of A(i,k) / (A(i,j) + A(j,k)); absent when no
  // triple has a positive denominator (n < 3 or A identically zero).
  std::optional<SigmaWitness> witness;
};

// F(x) = 0.5 x'Ax + b'x with A symmetric, non-negative off-diagonal entries
// allowed to be anything for the general case, and zero diagonal. The
// diversity flag records A >= 0 and b >= 0 entrywise, the regime in which the
// rounding guarantees apply.
class QuadraticObjective : public FirstOrderObjective {
 public:
  QuadraticObjective(Matrix a, std::vector<double> b);

  int Size() const override { return static_cast<int>(b_.size()); }
  double Value(const std::vector<double>& x) const override;
  std::vector<double> Gradient(const std::vector<double>& x) const override;
  bool HasNonPositiveThirdDerivatives() const override { return true; }

  // Combinatorial form: sum of A over unordered pairs inside s plus b over s.
  double ValueOfSet(const Subset& s) const override;

  bool IsDiversity() const { return diversity_; }
  const Matrix& A() const { return a_; }
  const std::vector<double>& B() const { return b_; }

  // One-sided smoothness along a direction: checks
  //   0.5 u'Au <= sigma * (|u|_1 / |x|_1) * u' grad F(x) + 1e-12.
  bool CheckOssDirect(const std::vector<double>& x,
                      const std::vector<double>& u, double sigma) const;

  nlohmann::json ToJson() const;
  static QuadraticObjective FromJson(const nlohmann::json& doc);

 private:
  Matrix a_;
  std::vector<double> b_;
  bool diversity_;
};

// Smallest sigma for which A is a sigma-semi-metric, found by scanning all
// triples. Requires A symmetric, non-negative, zero diagonal. Throws
// InfiniteSigmaError when some A(i,k) > 0 sits over a zero denominator.
SigmaCertificate EstimateSigma(const Matrix& a);

// Pointwise sufficient condition for one-sided smoothness at x:
//   |x|_1 * A(i,j) <= sigma * (grad_i + grad_j) + 1e-12  for all i, j.
bool CheckOssSufficient(const QuadraticObjective& q,
                        const std::vector<double>& x, double sigma);

struct BoundPair {
  double lhs = 0;
  double rhs = 0;
};

// Both sides of the gradient growth inequality
//   u' grad F(x + eps u) <= (|x + eps u|_1 / |x|_1)^(2 sigma) u' grad F(x).
BoundPair GradientGrowthPair(const FirstOrderObjective& f,
                             const std::vector<double>& x,
                             const std::vector<double>& u, double eps,
                             double sigma);

// Value of F at the family's point, next to the pair expansion
//   sum_k w_k b(I_k) + sum_k w_k^2 A(I_k) + sum_{k<l} w_k w_l A(I_k, I_l)
// which must agree exactly in exact arithmetic.
BoundPair DecompositionIdentity(const QuadraticObjective& q,
                                const WeightedSetFamily& family);

// Concave procurement objective F(x) = b'x - 0.5 x'Cx with C the collusion
// matrix plus a Gram term, C = collusion + G'G.
class ProcurementObjective : public FirstOrderObjective {
 public:
  ProcurementObjective(Matrix collusion, Matrix g, std::vector<double> bids);

  int Size() const override { return static_cast<int>(bids_.size()); }
  double Value(const std::vector<double>& x) const override;
  std::vector<double> Gradient(const std::vector<double>& x) const override;
  bool HasNonPositiveThirdDerivatives() const override { return true; }

  const Matrix& Collusion() const { return collusion_; }
  const Matrix& G() const { return g_; }
  const std::vector<double>& Bids() const { return bids_; }
  const Matrix& C() const { return c_; }

  // Largest |C(i,j)|.
  double MaxAbsEntry() const { return max_abs_entry_; }

  // Locality parameter n^3 * max |C(i,j)| for the eta-local discretization.
  double Eta() const;

  // Gradient stays at least 1/n over the whole box, checked at the
  // minimizing vertex of each coordinate.
  bool MonotoneCheck() const;

  // Sampled copositivity of C: u'Cu >= -1e-9 on random non-negative vectors
  // plus every standard basis vector and pairwise sum.
  bool CopositiveSampled(int draws, std::uint64_t seed) const;

  // Same one-sided smoothness check as the quadratic case with Hessian -C.
  bool CheckOssDirect(const std::vector<double>& x,
                      const std::vector<double>& u, double sigma) const;

  nlohmann::json ToJson() const;
  static ProcurementObjective FromJson(const nlohmann::json& doc);

 private:
  Matrix collusion_;
  Matrix g_;
  std::vector<double> bids_;
  Matrix c_;
  double max_abs_entry_;
};

// Dense table of a set function on n <= 16 elements, indexed by bitmask.
class SetFunctionTable {
 public:
  SetFunctionTable(int num_elements, std::vector<double> values);

  static SetFunctionTable FromFunction(
      int num_elements, const std::function<double(const Subset&)>& f);

  int NumElements() const { return num_elements_; }
  double At(std::uint32_t mask) const { return values_[mask]; }
  double AtSet(const Subset& s) const;

  bool IsMonotone(double tol) const;

  // Exhaustive multilinear extension: sum over all subsets of
  // f(S) * prod_{i in S} x_i * prod_{i not in S} (1 - x_i).
  double ExactMultilinear(const std::vector<double>& x) const;

 private:
  int num_elements_;
  std::vector<double> values_;
};

// Multilinear extension of a table as a first-order objective. Exponential
// in n, intended for cross-checks against the closed-form quadratics and for
// exercising the general (no third-derivative information) greedy path.
class MultilinearObjective : public FirstOrderObjective {
 public:
  explicit MultilinearObjective(SetFunctionTable table)
      : table_(std::move(table)) {}

  int Size() const override { return table_.NumElements(); }
  double Value(const std::vector<double>& x) const override;
  std::vector<double> Gradient(const std::vector<double>& x) const override;
  bool HasNonPositiveThirdDerivatives() const override { return false; }

 private:
  SetFunctionTable table_;
};

}  // namespace ossmax

#endif  // OSSMAX_OBJECTIVE_HPP_
