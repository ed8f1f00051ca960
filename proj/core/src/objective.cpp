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

#include "ossmax/objective.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "ossmax/errors.hpp"
#include "ossmax/rng.hpp"
#include "ossmax/tolerances.hpp"

namespace ossmax {

namespace {

constexpr double kMatrixTol = 1e-12;

double Norm1(const std::vector<double>& x) {
  double total = 0;
  for (double v : x) total += std::abs(v);
  return total;
}

double Dot(const std::vector<double>& a, const std::vector<double>& b) {
  double total = 0;
  for (size_t i = 0; i < a.size(); ++i) total += a[i] * b[i];
  return total;
}

void CheckVectorSize(const std::vector<double>& x, int n, const char* what) {
  if (static_cast<int>(x.size()) != n) {
    throw InputError(std::string(what) + ": expected length " +
                     std::to_string(n) + ", got " + std::to_string(x.size()));
  }
}

void CheckSymmetricSquare(const Matrix& a, int n, const char* what) {
  if (static_cast<int>(a.size()) != n) {
    throw InputError(std::string(what) + " is not n x n");
  }
  for (const auto& row : a) {
    if (static_cast<int>(row.size()) != n) {
      throw InputError(std::string(what) + " is not n x n");
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (std::abs(a[i][j] - a[j][i]) > kMatrixTol) {
        throw InputError(std::string(what) + " is not symmetric at (" +
                         std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  }
}

// Sum over unordered pairs inside s.
double PairSum(const Matrix& a, const Subset& s) {
  double total = 0;
  for (size_t i = 0; i < s.size(); ++i) {
    for (size_t j = i + 1; j < s.size(); ++j) total += a[s[i]][s[j]];
  }
  return total;
}

// Sum over ordered pairs between s and t.
double CrossSum(const Matrix& a, const Subset& s, const Subset& t) {
  double total = 0;
  for (int i : s) {
    for (int j : t) total += a[i][j];
  }
  return total;
}

}  // namespace

double FirstOrderObjective::ValueOfSet(const Subset& s) const {
  std::vector<double> x(Size(), 0.0);
  for (int e : NormalizeSubset(s, Size())) x[e] = 1.0;
  return Value(x);
}

QuadraticObjective::QuadraticObjective(Matrix a, std::vector<double> b)
    : a_(std::move(a)), b_(std::move(b)) {
  const int n = static_cast<int>(b_.size());
  CheckSymmetricSquare(a_, n, "pairwise matrix");
  for (int i = 0; i < n; ++i) {
    if (std::abs(a_[i][i]) > kMatrixTol) {
      throw InputError("pairwise matrix must have zero diagonal");
    }
  }
  diversity_ = true;
  for (const auto& row : a_) {
    for (double v : row) {
      if (v < 0) diversity_ = false;
    }
  }
  for (double v : b_) {
    if (v < 0) diversity_ = false;
  }
}

double QuadraticObjective::Value(const std::vector<double>& x) const {
  CheckVectorSize(x, Size(), "point");
  double quad = 0;
  for (int i = 0; i < Size(); ++i) quad += x[i] * Dot(a_[i], x);
  return 0.5 * quad + Dot(b_, x);
}

std::vector<double> QuadraticObjective::Gradient(
    const std::vector<double>& x) const {
  CheckVectorSize(x, Size(), "point");
  std::vector<double> g(Size());
  for (int i = 0; i < Size(); ++i) g[i] = Dot(a_[i], x) + b_[i];
  return g;
}

double QuadraticObjective::ValueOfSet(const Subset& s) const {
  const Subset sorted = NormalizeSubset(s, Size());
  double total = PairSum(a_, sorted);
  for (int e : sorted) total += b_[e];
  return total;
}

bool QuadraticObjective::CheckOssDirect(const std::vector<double>& x,
                                        const std::vector<double>& u,
                                        double sigma) const {
  CheckVectorSize(x, Size(), "point");
  CheckVectorSize(u, Size(), "direction");
  const double x_norm = Norm1(x);
  if (x_norm <= 0) throw InputError("smoothness check needs x != 0");
  double curvature = 0;
  for (int i = 0; i < Size(); ++i) curvature += u[i] * Dot(a_[i], u);
  curvature *= 0.5;
  const double rhs = sigma * (Norm1(u) / x_norm) * Dot(u, Gradient(x));
  return curvature <= rhs + kOssSlack;
}

nlohmann::json QuadraticObjective::ToJson() const {
  return {{"A", a_}, {"b", b_}};
}

QuadraticObjective QuadraticObjective::FromJson(const nlohmann::json& doc) {
  try {
    return QuadraticObjective(doc.at("A").get<Matrix>(),
                              doc.at("b").get<std::vector<double>>());
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed objective: ") + e.what());
  }
}

SigmaCertificate EstimateSigma(const Matrix& a) {
  const int n = static_cast<int>(a.size());
  CheckSymmetricSquare(a, n, "pairwise matrix");
  for (int i = 0; i < n; ++i) {
    if (std::abs(a[i][i]) > kMatrixTol) {
      throw InputError("pairwise matrix must have zero diagonal");
    }
    for (double v : a[i]) {
      if (v < 0) throw InputError("pairwise matrix must be non-negative");
    }
  }
  SigmaCertificate cert;
  for (int i = 0; i < n; ++i) {
    for (int k = i + 1; k < n; ++k) {
      if (a[i][k] <= 0) continue;
      for (int j = 0; j < n; ++j) {
        if (j == i || j == k) continue;
        const double den = a[i][j] + a[j][k];
        if (den == 0) {
          throw InfiniteSigmaError(
              "no finite smoothness: A(" + std::to_string(i) + "," +
              std::to_string(k) + ") > 0 but A(" + std::to_string(i) + "," +
              std::to_string(j) + ") + A(" + std::to_string(j) + "," +
              std::to_string(k) + ") = 0");
        }
        const double ratio = a[i][k] / den;
        if (ratio > cert.sigma) {
          cert.sigma = ratio;
          cert.witness = SigmaWitness{i, j, k};
        }
      }
    }
  }
  return cert;
}

bool CheckOssSufficient(const QuadraticObjective& q,
                        const std::vector<double>& x, double sigma) {
  CheckVectorSize(x, q.Size(), "point");
  for (double v : x) {
    if (v < 0) throw InputError("smoothness check needs x >= 0");
  }
  const double x_norm = Norm1(x);
  if (x_norm <= 0) throw InputError("smoothness check needs x != 0");
  const std::vector<double> g = q.Gradient(x);
  for (int i = 0; i < q.Size(); ++i) {
    for (int j = i + 1; j < q.Size(); ++j) {
      if (x_norm * q.A()[i][j] > sigma * (g[i] + g[j]) + kOssSlack) {
        return false;
      }
    }
  }
  return true;
}

BoundPair GradientGrowthPair(const FirstOrderObjective& f,
                             const std::vector<double>& x,
                             const std::vector<double>& u, double eps,
                             double sigma) {
  CheckVectorSize(x, f.Size(), "point");
  CheckVectorSize(u, f.Size(), "direction");
  const double x_norm = Norm1(x);
  if (x_norm <= 0) throw InputError("gradient growth needs x != 0");
  std::vector<double> shifted(x);
  for (int i = 0; i < f.Size(); ++i) shifted[i] += eps * u[i];
  BoundPair sides;
  sides.lhs = Dot(u, f.Gradient(shifted));
  sides.rhs =
      std::pow(Norm1(shifted) / x_norm, 2.0 * sigma) * Dot(u, f.Gradient(x));
  return sides;
}

BoundPair DecompositionIdentity(const QuadraticObjective& q,
                                const WeightedSetFamily& family) {
  BoundPair sides;
  sides.lhs = q.Value(family.PointOf(q.Size()));
  double rhs = 0;
  const auto& entries = family.entries;
  for (size_t k = 0; k < entries.size(); ++k) {
    const Subset set_k = NormalizeSubset(entries[k].set, q.Size());
    const double w = entries[k].weight;
    double linear = 0;
    for (int e : set_k) linear += q.B()[e];
    rhs += w * linear + w * w * PairSum(q.A(), set_k);
    for (size_t l = k + 1; l < entries.size(); ++l) {
      const Subset set_l = NormalizeSubset(entries[l].set, q.Size());
      rhs += w * entries[l].weight * CrossSum(q.A(), set_k, set_l);
    }
  }
  sides.rhs = rhs;
  return sides;
}

ProcurementObjective::ProcurementObjective(Matrix collusion, Matrix g,
                                           std::vector<double> bids)
    : collusion_(std::move(collusion)),
      g_(std::move(g)),
      bids_(std::move(bids)) {
  const int n = static_cast<int>(bids_.size());
  CheckSymmetricSquare(collusion_, n, "collusion matrix");
  for (const auto& row : collusion_) {
    for (double v : row) {
      if (v < 0) throw InputError("collusion matrix must be non-negative");
    }
  }
  for (const auto& row : g_) {
    if (static_cast<int>(row.size()) != n) {
      throw InputError("factor matrix rows must have length n");
    }
  }
  for (double v : bids_) {
    if (v < 0) throw InputError("bids must be non-negative");
  }
  c_.assign(n, std::vector<double>(n, 0.0));
  max_abs_entry_ = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double gram = 0;
      for (const auto& row : g_) gram += row[i] * row[j];
      c_[i][j] = collusion_[i][j] + gram;
      max_abs_entry_ = std::max(max_abs_entry_, std::abs(c_[i][j]));
    }
  }
}

double ProcurementObjective::Value(const std::vector<double>& x) const {
  CheckVectorSize(x, Size(), "point");
  double quad = 0;
  for (int i = 0; i < Size(); ++i) quad += x[i] * Dot(c_[i], x);
  return Dot(bids_, x) - 0.5 * quad;
}

std::vector<double> ProcurementObjective::Gradient(
    const std::vector<double>& x) const {
  CheckVectorSize(x, Size(), "point");
  std::vector<double> g(Size());
  for (int i = 0; i < Size(); ++i) g[i] = bids_[i] - Dot(c_[i], x);
  return g;
}

double ProcurementObjective::Eta() const {
  const double n = Size();
  return n * n * n * max_abs_entry_;
}

bool ProcurementObjective::MonotoneCheck() const {
  // The box minimum of grad_i is attained at the vertex selecting exactly the
  // positive entries of row i.
  const double floor = 1.0 / Size();
  for (int i = 0; i < Size(); ++i) {
    double positive_mass = 0;
    for (double v : c_[i]) positive_mass += std::max(v, 0.0);
    if (bids_[i] - positive_mass < floor - kOssSlack) return false;
  }
  return true;
}

bool ProcurementObjective::CopositiveSampled(int draws,
                                             std::uint64_t seed) const {
  const int n = Size();
  auto quad_form = [&](const std::vector<double>& u) {
    double total = 0;
    for (int i = 0; i < n; ++i) total += u[i] * Dot(c_[i], u);
    return total;
  };
  std::vector<double> u(n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      std::fill(u.begin(), u.end(), 0.0);
      u[i] += 1.0;
      u[j] += 1.0;
      if (quad_form(u) < -kIneqTol) return false;
    }
  }
  SplitMix64 rng(seed);
  for (int d = 0; d < draws; ++d) {
    for (int i = 0; i < n; ++i) u[i] = rng.NextDouble();
    if (quad_form(u) < -kIneqTol) return false;
  }
  return true;
}

bool ProcurementObjective::CheckOssDirect(const std::vector<double>& x,
                                          const std::vector<double>& u,
                                          double sigma) const {
  CheckVectorSize(x, Size(), "point");
  CheckVectorSize(u, Size(), "direction");
  const double x_norm = Norm1(x);
  if (x_norm <= 0) throw InputError("smoothness check needs x != 0");
  double curvature = 0;
  for (int i = 0; i < Size(); ++i) curvature -= u[i] * Dot(c_[i], u);
  curvature *= 0.5;
  const double rhs = sigma * (Norm1(u) / x_norm) * Dot(u, Gradient(x));
  return curvature <= rhs + kOssSlack;
}

nlohmann::json ProcurementObjective::ToJson() const {
  return {{"collusion", collusion_}, {"G", g_}, {"bids", bids_}};
}

ProcurementObjective ProcurementObjective::FromJson(
    const nlohmann::json& doc) {
  try {
    return ProcurementObjective(doc.at("collusion").get<Matrix>(),
                                doc.at("G").get<Matrix>(),
                                doc.at("bids").get<std::vector<double>>());
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed procurement objective: ") +
                     e.what());
  }
}

SetFunctionTable::SetFunctionTable(int num_elements,
                                   std::vector<double> values)
    : num_elements_(num_elements), values_(std::move(values)) {
  if (num_elements < 0 || num_elements > 16) {
    throw InputError("set function table limited to 16 elements");
  }
  if (values_.size() != (size_t{1} << num_elements)) {
    throw InputError("set function table needs 2^n values");
  }
}

SetFunctionTable SetFunctionTable::FromFunction(
    int num_elements, const std::function<double(const Subset&)>& f) {
  if (num_elements < 0 || num_elements > 16) {
    throw InputError("set function table limited to 16 elements");
  }
  std::vector<double> values(size_t{1} << num_elements);
  for (std::uint32_t mask = 0; mask < values.size(); ++mask) {
    Subset s;
    for (int e = 0; e < num_elements; ++e) {
      if (mask & (1u << e)) s.push_back(e);
    }
    values[mask] = f(s);
  }
  return SetFunctionTable(num_elements, std::move(values));
}

double SetFunctionTable::AtSet(const Subset& s) const {
  std::uint32_t mask = 0;
  for (int e : NormalizeSubset(s, num_elements_)) mask |= 1u << e;
  return values_[mask];
}

bool SetFunctionTable::IsMonotone(double tol) const {
  const std::uint32_t limit = 1u << num_elements_;
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    for (int e = 0; e < num_elements_; ++e) {
      const std::uint32_t bit = 1u << e;
      if (mask & bit) continue;
      if (values_[mask | bit] < values_[mask] - tol) return false;
    }
  }
  return true;
}

double SetFunctionTable::ExactMultilinear(const std::vector<double>& x) const {
  CheckVectorSize(x, num_elements_, "point");
  const std::uint32_t limit = 1u << num_elements_;
  double total = 0;
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    double prob = 1;
    for (int e = 0; e < num_elements_; ++e) {
      prob *= (mask & (1u << e)) ? x[e] : 1.0 - x[e];
    }
    total += prob * values_[mask];
  }
  return total;
}

double MultilinearObjective::Value(const std::vector<double>& x) const {
  return table_.ExactMultilinear(x);
}

std::vector<double> MultilinearObjective::Gradient(
    const std::vector<double>& x) const {
  CheckVectorSize(x, Size(), "point");
  std::vector<double> g(Size());
  std::vector<double> probe(x);
  for (int i = 0; i < Size(); ++i) {
    probe[i] = 1.0;
    const double high = table_.ExactMultilinear(probe);
    probe[i] = 0.0;
    const double low = table_.ExactMultilinear(probe);
    probe[i] = x[i];
    g[i] = high - low;
  }
  return g;
}

}  // namespace ossmax
