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

#include "ossmax/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ossmax/errors.hpp"
#include "ossmax/rounding.hpp"
#include "ossmax/tolerances.hpp"

namespace ossmax {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double L1(const std::vector<double>& v) {
  double s = 0;
  for (double c : v) s += std::abs(c);
  return s;
}

double Dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Subset MaskToSet(std::uint32_t mask, int n) {
  Subset s;
  for (int i = 0; i < n; ++i) {
    if (mask >> i & 1u) s.push_back(i);
  }
  return s;
}

std::vector<double> RandomBox(SplitMix64& rng, int n, double lo, double hi) {
  std::vector<double> x(n);
  for (double& c : x) c = rng.NextInRange(lo, hi);
  return x;
}

// Worst margin of the pointwise sufficient condition at x; non-positive
// means the condition holds for every pair.
double SufficientMargin(const QuadraticObjective& q,
                        const std::vector<double>& x, double sigma) {
  const Matrix& a = q.A();
  const std::vector<double> g = q.Gradient(x);
  const double norm = L1(x);
  const int n = q.Size();
  double worst = kNegInf;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      worst = std::max(worst, norm * a[i][j] - sigma * (g[i] + g[j]));
    }
  }
  return std::isfinite(worst) ? worst : 0;
}

// Margin of the direction-wise inequality at (x, u).
double DirectMargin(const QuadraticObjective& q, const std::vector<double>& x,
                    const std::vector<double>& u, double sigma) {
  const Matrix& a = q.A();
  const int n = q.Size();
  double quad = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) quad += u[i] * a[i][j] * u[j];
  }
  const std::vector<double> g = q.Gradient(x);
  return 0.5 * quad - sigma * (L1(u) / L1(x)) * Dot(u, g);
}

void EnumerateIndependent(const FirstOrderObjective& f, const Matroid& m,
                          Subset& cur, int next, std::uint32_t cur_mask,
                          BruteForceResult& best, std::uint32_t& best_mask) {
  const double v = f.ValueOfSet(cur);
  if (v > best.value || (v == best.value && cur_mask < best_mask)) {
    best.value = v;
    best.set = cur;
    best_mask = cur_mask;
  }
  for (int e = next; e < m.NumElements(); ++e) {
    cur.push_back(e);
    if (m.IsIndependent(cur)) {
      EnumerateIndependent(f, m, cur, e + 1, cur_mask | (1u << e), best,
                           best_mask);
    }
    cur.pop_back();
  }
}

}  // namespace

BruteForceResult BruteForceDiscreteOpt(const FirstOrderObjective& f,
                                       const Matroid& m) {
  const int n = m.NumElements();
  if (f.Size() != n) throw InputError("objective and matroid sizes differ");
  if (n > 16) throw InputError("brute force is limited to 16 elements");
  BruteForceResult best;
  best.value = kNegInf;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    Subset s = MaskToSet(mask, n);
    if (!m.IsIndependent(s)) continue;
    const double v = f.ValueOfSet(s);
    if (v > best.value) {
      best.value = v;
      best.set = std::move(s);
    }
  }
  return best;
}

BruteForceResult BruteForceByEnumeration(const FirstOrderObjective& f,
                                         const Matroid& m) {
  const int n = m.NumElements();
  if (f.Size() != n) throw InputError("objective and matroid sizes differ");
  if (n > 16) throw InputError("brute force is limited to 16 elements");
  BruteForceResult best;
  best.value = kNegInf;
  std::uint32_t best_mask = 0;
  Subset cur;
  EnumerateIndependent(f, m, cur, 0, 0, best, best_mask);
  return best;
}

bool CheckInPolytope(const Matroid& m, const std::vector<double>& x) {
  const int n = m.NumElements();
  if (static_cast<int>(x.size()) != n) {
    throw InputError("point size does not match the ground set");
  }
  if (n > 10) throw InputError("polytope check is limited to 10 elements");
  for (double c : x) {
    if (c < -kIneqTol) return false;
  }
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    const Subset t = MaskToSet(mask, n);
    double total = 0;
    for (int e : t) total += x[e];
    if (total > m.SubsetRank(t) + kIneqTol) return false;
  }
  return true;
}

nlohmann::json VerificationReport::ToJson() const {
  return nlohmann::json{{"checkName", check},
                        {"passed", passed},
                        {"trials", trials},
                        {"witness", witness},
                        {"worstViolation", worst_violation}};
}

double CertifiedOssSigma(const QuadraticObjective& q) {
  bool nonzero = false;
  for (const auto& row : q.A()) {
    for (double v : row) {
      if (v > 0) nonzero = true;
    }
  }
  if (!nonzero) return 0;
  return std::max(EstimateSigma(q.A()).sigma, 1.0);
}

VerificationReport VerifyGradientGrowth(const FirstOrderObjective& f,
                                        double sigma, int trials,
                                        std::uint64_t seed) {
  VerificationReport r;
  r.check = "gradientGrowth";
  r.trials = trials;
  SplitMix64 rng(seed);
  const int n = f.Size();
  double worst = kNegInf;
  for (int t = 0; t < trials; ++t) {
    std::vector<double> x = RandomBox(rng, n, 0.0, 1.0);
    while (L1(x) < 0.1) x = RandomBox(rng, n, 0.0, 1.0);
    const std::vector<double> u = RandomBox(rng, n, 0.0, 1.0);
    const double eps = rng.NextDouble();
    const BoundPair p = GradientGrowthPair(f, x, u, eps, sigma);
    const double v = p.lhs - p.rhs;
    if (v > worst) {
      worst = v;
      if (v > kIneqTol) {
        std::ostringstream os;
        os << "draw " << t << ": lhs " << p.lhs << " rhs " << p.rhs << " eps "
           << eps;
        r.witness = os.str();
      }
    }
  }
  r.worst_violation = std::isfinite(worst) ? worst : 0;
  r.passed = r.worst_violation <= kIneqTol;
  if (r.passed) r.witness.clear();
  return r;
}

VerificationReport VerifyOssChecks(const QuadraticObjective& q, double sigma,
                                   int trials, std::uint64_t seed) {
  VerificationReport r;
  r.check = "ossChecks";
  r.trials = trials;
  SplitMix64 rng(seed);
  const int n = q.Size();
  double worst = kNegInf;
  for (int t = 0; t < trials; ++t) {
    const std::vector<double> x = RandomBox(rng, n, 1e-3, 1.0);
    const std::vector<double> u = RandomBox(rng, n, 0.0, 1.0);
    const double vs = SufficientMargin(q, x, sigma);
    const double vd = DirectMargin(q, x, u, sigma);
    const double v = std::max(vs, vd);
    if (v > worst) {
      worst = v;
      if (v > kOssSlack) {
        std::ostringstream os;
        os << "draw " << t << ": sufficient margin " << vs
           << ", direct margin " << vd;
        r.witness = os.str();
      }
    }
  }
  r.worst_violation = std::isfinite(worst) ? worst : 0;
  r.passed = r.worst_violation <= kOssSlack;
  if (r.passed) r.witness.clear();
  return r;
}

VerificationReport VerifyEndToEnd(const Instance& instance,
                                  const GreedyConfig& cfg) {
  VerificationReport r;
  r.check = "endToEnd";
  r.trials = 1;
  const Matroid& m = *instance.matroid;
  if (m.NumElements() > 14) {
    throw InputError("end-to-end check is limited to 14 elements");
  }
  const GreedyRun run = RunJumpStart(instance.Objective(), m, cfg);
  const BruteForceResult opt = BruteForceDiscreteOpt(instance.Objective(), m);
  const double achieved = run.values.back();
  double worst = run.certified_bound * opt.value - achieved;
  bool pass = worst <= kIneqTol;
  std::ostringstream os;
  if (!pass) {
    os << "greedy certificate: bound " << run.certified_bound << " opt "
       << opt.value << " achieved " << achieved;
  }
  const WeightedSetFamily bases = SaturateToBases(m, run.decomposition);
  const std::optional<int> circuit = m.MinCircuitSize();
  const bool roundable = (circuit.has_value() && *circuit >= 3) ||
                         bases.entries.size() == 1 || m.Rank() >= 2;
  if (instance.IsQuadratic() && instance.quadratic->IsDiversity() &&
      roundable) {
    const RoundBestResult rounded =
        RoundBest(*instance.quadratic, m, bases, run.config.sigma);
    const std::vector<double> saturated = bases.PointOf(m.NumElements());
    const double frac = instance.quadratic->Value(saturated);
    const double v2 = frac - rounded.gap_certificate * rounded.value;
    if (v2 > kIneqTol) {
      pass = false;
      if (os.tellp() == 0) {
        os << "rounding certificate: gap " << rounded.gap_certificate
           << " rounded " << rounded.value << " fractional " << frac;
      }
    }
    worst = std::max(worst, v2);
    // Composition of the two certificates; its slack doubles.
    const double v3 = run.certified_bound * opt.value -
                      rounded.gap_certificate * rounded.value;
    if (v3 > 2 * kIneqTol) {
      pass = false;
      worst = std::max(worst, v3);
      if (os.tellp() == 0) os << "composed certificate violated by " << v3;
    }
  }
  r.worst_violation = worst;
  r.passed = pass;
  r.witness = os.str();
  return r;
}

namespace {

// Margin of every certified coverage property; non-positive means all hold.
double CoverageMargin(const Matroid& m, const QuadraticCoverage& cov) {
  const int n = m.NumElements();
  const std::vector<double>& x = cov.source_point;
  std::vector<std::vector<double>> pair_weight(n, std::vector<double>(n, 0.0));
  std::vector<double> single_weight(n, 0.0);
  for (const WeightedSet& entry : cov.family.entries) {
    for (std::size_t a = 0; a < entry.set.size(); ++a) {
      single_weight[entry.set[a]] += entry.weight;
      for (std::size_t b = a + 1; b < entry.set.size(); ++b) {
        pair_weight[entry.set[a]][entry.set[b]] += entry.weight;
        pair_weight[entry.set[b]][entry.set[a]] += entry.weight;
      }
    }
  }
  double worst = kNegInf;
  for (int u = 0; u < n; ++u) {
    worst = std::max(worst, x[u] - single_weight[u]);
    for (int v = u + 1; v < n; ++v) {
      worst = std::max(worst, x[u] * x[v] - pair_weight[u][v]);
    }
  }
  const int r = m.Rank();
  const int c = m.MinCircuitSize().value();
  worst = std::max(worst,
                   cov.total_weight - (3.0 + 2.0 * r / (c - 2)) - kIneqTol);
  worst = std::max(worst, static_cast<double>(cov.max_leftover - (c - 1) / 2));
  return worst;
}

void AppendLemmaReports(std::vector<VerificationReport>& out,
                        std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<std::pair<std::string, QuadraticObjective>> cases;
  cases.emplace_back(
      "graph", GenGraphSemimetric(7, GenRandomGraphEdges(7, 0.4, rng), 3.0));
  cases.emplace_back("negtype", GenNegativeType(8, 3, rng.Next()));
  cases.emplace_back("metric", GenPoweredMetric(8, 2, 1.0, rng.Next()));
  cases.emplace_back("powered", GenPoweredMetric(7, 2, 3.0, rng.Next()));
  cases.emplace_back("gap", GenGapInstance(3, 2, 4.0).objective);
  for (const auto& [name, q] : cases) {
    const double sigma = CertifiedOssSigma(q);
    VerificationReport g = VerifyGradientGrowth(q, sigma, 400, rng.Next());
    g.check = "gradientGrowth/" + name;
    out.push_back(std::move(g));
    VerificationReport o = VerifyOssChecks(q, sigma, 200, rng.Next());
    o.check = "ossChecks/" + name;
    out.push_back(std::move(o));
  }
  const ProcurementObjective p = GenProcurement(6, 3, rng.Next(), 1.5);
  VerificationReport g = VerifyGradientGrowth(p, 0.0, 400, rng.Next());
  g.check = "gradientGrowth/procurement";
  out.push_back(std::move(g));

  VerificationReport ml;
  ml.check = "multilinearConsistency";
  ml.trials = 20;
  double worst = kNegInf;
  for (int t = 0; t < ml.trials; ++t) {
    const int n = 4 + rng.NextInt(4);
    const QuadraticObjective q = RandomDiversityObjective(n, rng);
    const SetFunctionTable table = SetFunctionTable::FromFunction(
        n, [&q](const Subset& s) { return q.ValueOfSet(s); });
    const std::vector<double> x = RandomBox(rng, n, 0.0, 1.0);
    const double closed = q.Value(x);
    const double exact = table.ExactMultilinear(x);
    worst = std::max(worst,
                     std::abs(closed - exact) / std::max(1.0, std::abs(closed)));
  }
  ml.worst_violation = worst;
  ml.passed = worst <= kIneqTol;
  out.push_back(std::move(ml));

  VerificationReport di;
  di.check = "decompositionIdentity";
  di.trials = 20;
  worst = kNegInf;
  for (int t = 0; t < di.trials; ++t) {
    const MatroidFamily family =
        kAllMatroidFamilies[t % kAllMatroidFamilies.size()];
    const auto m = RandomMatroid(family, rng);
    const QuadraticObjective q =
        RandomDiversityObjective(m->NumElements(), rng);
    const WeightedSetFamily fam =
        RandomBasisDecomposition(*m, 1 + rng.NextInt(4), rng);
    const BoundPair p = DecompositionIdentity(q, fam);
    worst = std::max(worst,
                     std::abs(p.lhs - p.rhs) / std::max(1.0, std::abs(p.lhs)));
  }
  di.worst_violation = worst;
  di.passed = worst <= kIneqTol;
  out.push_back(std::move(di));
}

void AppendRoundingReports(std::vector<VerificationReport>& out,
                           std::uint64_t seed) {
  SplitMix64 rng(seed);
  for (MatroidFamily family : kAllMatroidFamilies) {
    const std::string name = MatroidFamilyName(family);
    VerificationReport cov;
    cov.check = "coverage/" + name;
    cov.trials = 8;
    double worst = kNegInf;
    for (int t = 0; t < cov.trials; ++t) {
      const auto m = RandomMatroid(family, rng, 2, /*wide_circuits=*/true);
      const WeightedSetFamily bases =
          RandomBasisDecomposition(*m, 1 + rng.NextInt(3), rng);
      try {
        const QuadraticCoverage coverage = BuildQuadraticCoverage(*m, bases);
        worst = std::max(worst, CoverageMargin(*m, coverage));
        const QuadraticObjective q =
            RandomDiversityObjective(m->NumElements(), rng);
        const RoundedSet rounded = RoundByCoverage(q, coverage);
        worst = std::max(worst, q.Value(coverage.source_point) -
                                    rounded.gap_certificate * rounded.value -
                                    kIneqTol);
      } catch (const VerificationError& e) {
        worst = std::max(worst, 1.0);
        if (cov.witness.empty()) cov.witness = e.what();
      }
    }
    cov.worst_violation = worst;
    cov.passed = worst <= kIneqTol;
    out.push_back(std::move(cov));

    VerificationReport sw;
    sw.check = "swapRound/" + name;
    sw.trials = 8;
    worst = kNegInf;
    for (int t = 0; t < sw.trials; ++t) {
      const auto m = RandomMatroid(family, rng, 2);
      const QuadraticObjective q =
          RandomDiversityObjective(m->NumElements(), rng);
      const WeightedSetFamily bases =
          RandomBasisDecomposition(*m, 1 + rng.NextInt(4), rng);
      const double sigma = EstimateSigma(q.A()).sigma;
      try {
        const SwapRoundResult res = SwapRound(q, *m, bases, sigma);
        worst = std::max(worst, res.worst_step_violation);
        worst = std::max(worst, q.Value(bases.PointOf(m->NumElements())) -
                                    res.gap_certificate * res.value -
                                    kIneqTol);
      } catch (const VerificationError& e) {
        worst = std::max(worst, 1.0);
        if (sw.witness.empty()) sw.witness = e.what();
      }
    }
    sw.worst_violation = worst;
    sw.passed = worst <= kIneqTol;
    out.push_back(std::move(sw));
  }
}

void AppendEndToEndReports(std::vector<VerificationReport>& out,
                           std::uint64_t seed) {
  SplitMix64 rng(seed);
  for (MatroidFamily family : kAllMatroidFamilies) {
    VerificationReport agg;
    agg.check = "endToEnd/" + MatroidFamilyName(family);
    agg.trials = 4;
    double worst = kNegInf;
    bool pass = true;
    for (int t = 0; t < agg.trials; ++t) {
      Instance instance;
      instance.matroid = RandomMatroid(family, rng, 2);
      instance.quadratic.emplace(
          RandomDiversityObjective(instance.matroid->NumElements(), rng));
      instance.meta.generator = "random";
      GreedyConfig cfg;
      cfg.mode = GreedyMode::kOneStep;
      cfg.sigma = EstimateSigma(instance.quadratic->A()).sigma;
      const VerificationReport r = VerifyEndToEnd(instance, cfg);
      pass = pass && r.passed;
      worst = std::max(worst, r.worst_violation);
      if (!r.passed && agg.witness.empty()) agg.witness = r.witness;
    }
    agg.worst_violation = worst;
    agg.passed = pass;
    out.push_back(std::move(agg));
  }

  VerificationReport gap_report;
  gap_report.check = "endToEnd/gap";
  double worst = kNegInf;
  bool pass = true;
  int runs = 0;
  for (int k = 2; k <= 4; ++k) {
    for (int t = 1; t <= k; ++t) {
      GapInstance gap = GenGapInstance(k, t, 4.0);
      Instance instance;
      instance.matroid = std::move(gap.matroid);
      instance.quadratic.emplace(std::move(gap.objective));
      instance.meta.generator = "gap";
      GreedyConfig cfg;
      cfg.mode = GreedyMode::kOneStep;
      cfg.sigma = EstimateSigma(instance.quadratic->A()).sigma;
      const VerificationReport r = VerifyEndToEnd(instance, cfg);
      pass = pass && r.passed;
      worst = std::max(worst, r.worst_violation);
      if (!r.passed && gap_report.witness.empty()) {
        gap_report.witness = r.witness;
      }
      ++runs;
    }
  }
  gap_report.trials = runs;
  gap_report.worst_violation = worst;
  gap_report.passed = pass;
  out.push_back(std::move(gap_report));
}

}  // namespace

std::vector<VerificationReport> VerifySuite(const std::string& suite,
                                            std::uint64_t seed) {
  const bool all = suite == "all";
  if (!all && suite != "lemmas" && suite != "rounding" &&
      suite != "endtoend") {
    throw InputError("unknown suite: " + suite);
  }
  std::vector<VerificationReport> out;
  if (all || suite == "lemmas") AppendLemmaReports(out, seed);
  if (all || suite == "rounding") AppendRoundingReports(out, seed + 1);
  if (all || suite == "endtoend") AppendEndToEndReports(out, seed + 2);
  return out;
}

const std::vector<MatroidFamily> kAllMatroidFamilies = {
    MatroidFamily::kUniform, MatroidFamily::kPartition,
    MatroidFamily::kGraphic, MatroidFamily::kPaired};

std::string MatroidFamilyName(MatroidFamily family) {
  switch (family) {
    case MatroidFamily::kUniform:
      return "uniform";
    case MatroidFamily::kPartition:
      return "partition";
    case MatroidFamily::kGraphic:
      return "graphic";
    case MatroidFamily::kPaired:
      return "paired";
  }
  throw InputError("unknown matroid family");
}

namespace {

std::unique_ptr<Matroid> DrawMatroid(MatroidFamily family, SplitMix64& rng,
                                     bool wide_circuits) {
  switch (family) {
    case MatroidFamily::kUniform: {
      const int n = 4 + rng.NextInt(7);
      const int r =
          wide_circuits ? 2 + rng.NextInt(n - 2) : 1 + rng.NextInt(n - 1);
      return std::make_unique<UniformMatroid>(n, r);
    }
    case MatroidFamily::kPartition: {
      std::vector<PartitionMatroid::Block> blocks;
      int next = 0;
      const int block_count = wide_circuits ? 2 : 2 + rng.NextInt(2);
      for (int b = 0; b < block_count; ++b) {
        const int size = wide_circuits ? 3 + rng.NextInt(2) : 2 + rng.NextInt(3);
        Subset elements;
        for (int e = 0; e < size; ++e) elements.push_back(next++);
        // Capacity below size keeps a circuit inside the block; at least two
        // keeps that circuit wide.
        const int capacity =
            wide_circuits ? 2 + rng.NextInt(size - 2) : 1 + rng.NextInt(size);
        blocks.push_back({std::move(elements), capacity});
      }
      // Keep the ground set within the documented 12-element budget.
      const int free_elements = next <= 11 ? rng.NextInt(2) : 0;
      next += free_elements;
      return std::make_unique<PartitionMatroid>(next, std::move(blocks));
    }
    case MatroidFamily::kGraphic: {
      const int v = 4 + rng.NextInt(3);
      std::vector<std::pair<int, int>> edges;
      for (int w = 1; w < v; ++w) edges.emplace_back(rng.NextInt(w), w);
      std::vector<std::pair<int, int>> missing;
      for (int a = 0; a < v; ++a) {
        for (int b = a + 1; b < v; ++b) {
          bool present = false;
          for (const auto& e : edges) {
            if (e == std::make_pair(a, b)) present = true;
          }
          if (!present) missing.emplace_back(a, b);
        }
      }
      const int extras = 1 + rng.NextInt(3);
      for (int e = 0; e < extras && !missing.empty(); ++e) {
        const int pick = rng.NextInt(static_cast<int>(missing.size()));
        edges.push_back(missing[pick]);
        missing.erase(missing.begin() + pick);
      }
      return std::make_unique<GraphicMatroid>(v, std::move(edges));
    }
    case MatroidFamily::kPaired: {
      const int k = 2 + rng.NextInt(4);
      const int t = wide_circuits ? 2 + rng.NextInt(k - 1) : 1 + rng.NextInt(k);
      return std::make_unique<PairedCircuitMatroid>(k, t);
    }
  }
  throw InputError("unknown matroid family");
}

}  // namespace

std::unique_ptr<Matroid> RandomMatroid(MatroidFamily family, SplitMix64& rng,
                                       int min_rank, bool wide_circuits) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    auto m = DrawMatroid(family, rng, wide_circuits);
    if (m->Rank() >= min_rank) return m;
  }
  throw InputError("could not draw a matroid with the requested rank");
}

QuadraticObjective RandomDiversityObjective(int n, SplitMix64& rng) {
  Matrix a(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      a[i][j] = a[j][i] = rng.NextDouble();
    }
  }
  std::vector<double> b(n);
  for (double& c : b) c = rng.NextDouble();
  return QuadraticObjective(std::move(a), std::move(b));
}

WeightedSetFamily RandomBasisDecomposition(const Matroid& m, int count,
                                           SplitMix64& rng) {
  if (count < 1) throw InputError("need at least one basis");
  std::vector<double> weights(count);
  double total = 0;
  for (double& w : weights) {
    w = 0.1 + rng.NextDouble();
    total += w;
  }
  WeightedSetFamily family;
  for (int i = 0; i < count; ++i) {
    std::vector<double> score(m.NumElements());
    for (double& s : score) s = 0.5 + rng.NextDouble();
    family.entries.push_back({weights[i] / total, m.MaxWeightIndependent(score)});
  }
  return family;
}

}  // namespace ossmax
