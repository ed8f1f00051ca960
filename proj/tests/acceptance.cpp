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
//
// Release gate: one line per criterion, every tolerance pinned in place.
// Exit status is the number of failed criteria.

#include <cmath>
#include <cstdio>
#include <functional>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "ossmax/canonical_json.hpp"
#include "ossmax/errors.hpp"
#include "ossmax/greedy.hpp"
#include "ossmax/instances.hpp"
#include "ossmax/matroid.hpp"
#include "ossmax/objective.hpp"
#include "ossmax/oracle.hpp"
#include "ossmax/rng.hpp"
#include "ossmax/rounding.hpp"
#include "ossmax/set_family.hpp"
#include "ossmax/solve.hpp"

namespace ossmax {
namespace {

constexpr double kTol = 1e-9;  // absolute slack on certified inequalities

struct Outcome {
  bool passed = false;
  std::string detail;
};

std::string Fmt(double v) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.3g", v);
  return buffer;
}

// Diverse pool of quadratic diversity objectives for the growth checks.
std::vector<QuadraticObjective> GrowthPool() {
  std::vector<QuadraticObjective> pool;
  SplitMix64 rng(1001);
  for (int i = 0; i < 8; ++i) {
    const int n = 5 + static_cast<int>(rng.NextInt(6));
    const double sigma0 = std::pow(2.0, static_cast<double>(i % 4));
    pool.push_back(GenGraphSemimetric(
        n, GenRandomGraphEdges(n, 0.5, rng), sigma0));
  }
  for (int i = 0; i < 8; ++i) {
    pool.push_back(GenNegativeType(5 + static_cast<int>(rng.NextInt(6)),
                                   2 + static_cast<int>(rng.NextInt(2)),
                                   rng.Next()));
  }
  const double powers[] = {1.0, 1.5, 2.0, 3.0};
  for (int i = 0; i < 8; ++i) {
    pool.push_back(GenPoweredMetric(5 + static_cast<int>(rng.NextInt(6)), 2,
                                    powers[i % 4], rng.Next()));
  }
  for (int k = 2; k <= 5; ++k) {
    pool.push_back(GenGapInstance(k, 2, 4.0).objective);
  }
  return pool;
}

// 1. Gradient growth inequality on 10^4 random draws across all generators.
Outcome GradientGrowthCriterion() {
  int draws = 0;
  double worst = -1e300;
  bool all_passed = true;
  const auto pool = GrowthPool();
  const int per_instance = 10000 / (static_cast<int>(pool.size()) + 4) + 1;
  std::uint64_t seed = 42;
  for (const auto& q : pool) {
    const auto report =
        VerifyGradientGrowth(q, CertifiedOssSigma(q), per_instance, seed++);
    draws += report.trials;
    worst = std::max(worst, report.worst_violation);
    all_passed = all_passed && report.passed;
  }
  for (int i = 0; i < 4; ++i) {
    const auto p = GenProcurement(6 + i, 1 + i % 3, 500 + i, 1.5);
    const auto report = VerifyGradientGrowth(p, 0.0, per_instance, seed++);
    draws += report.trials;
    worst = std::max(worst, report.worst_violation);
    all_passed = all_passed && report.passed;
  }
  Outcome out;
  out.passed = all_passed && draws >= 10000 && worst <= kTol;
  out.detail = std::to_string(draws) + " draws, worst violation " + Fmt(worst);
  return out;
}

// 2. Greedy certificate against the brute-force optimum, 50 instances per
// matroid family at alpha = 1/2, plus the classical sigma = 0 anchor.
Outcome GreedyGuaranteeCriterion() {
  SplitMix64 rng(2002);
  int runs = 0;
  double worst = -1e300;
  for (MatroidFamily family : kAllMatroidFamilies) {
    for (int trial = 0; trial < 50; ++trial) {
      const auto m = RandomMatroid(family, rng);
      if (m->NumElements() > 12) {
        return {false, "instance exceeded 12 elements"};
      }
      const auto q = RandomDiversityObjective(m->NumElements(), rng);
      GreedyConfig cfg;
      cfg.mode = GreedyMode::kOneStep;
      cfg.alpha = 0.5;
      cfg.sigma = EstimateSigma(q.A()).sigma;
      const auto run = RunJumpStart(q, *m, cfg);
      const auto best = BruteForceDiscreteOpt(q, *m);
      const double violation =
          run.certified_bound * best.value - run.values.back();
      worst = std::max(worst, violation);
      ++runs;
      if (violation > kTol) {
        return {false, "violation " + Fmt(violation) + " on " +
                           MatroidFamilyName(family) + " trial " +
                           std::to_string(trial)};
      }
    }
  }

  // Anchor: sigma = 0, alpha = 0 in multilinear mode must keep the classical
  // (1 - 1/e)(1 - 1/n) fraction of the optimum.
  double anchor_margin = 1e300;
  {
    const int n = 8;
    Matrix zero(n, std::vector<double>(n, 0.0));
    std::vector<double> b(n);
    for (double& v : b) v = 0.5 + rng.NextDouble();
    QuadraticObjective modular(zero, b);
    UniformMatroid m(n, 3);
    GreedyConfig cfg;
    cfg.mode = GreedyMode::kMultilinear;
    cfg.alpha = 0.0;
    cfg.sigma = 0.0;
    const auto run = RunJumpStart(modular, m, cfg);
    const auto best = BruteForceDiscreteOpt(modular, m);
    const double floor = (1 - std::exp(-1.0)) * (1 - 1.0 / n) * best.value;
    anchor_margin = std::min(anchor_margin, run.values.back() - floor);
  }
  {
    // Coverage set function through the exhaustive multilinear extension.
    const int n = 6;
    SplitMix64 cover_rng(77);
    std::vector<std::uint32_t> covers(n);
    for (auto& c : covers) c = static_cast<std::uint32_t>(cover_rng.Next() & 0xFFu);
    auto table = SetFunctionTable::FromFunction(n, [&](const Subset& s) {
      std::uint32_t mask = 0;
      for (int e : s) mask |= covers[e];
      return static_cast<double>(__builtin_popcount(mask));
    });
    MultilinearObjective f(table);
    UniformMatroid m(n, 3);
    GreedyConfig cfg;
    cfg.mode = GreedyMode::kMultilinear;
    cfg.alpha = 0.0;
    cfg.sigma = 0.0;
    const auto run = RunJumpStart(f, m, cfg);
    const auto best = BruteForceDiscreteOpt(f, m);
    const double floor = (1 - std::exp(-1.0)) * (1 - 1.0 / n) * best.value;
    anchor_margin = std::min(anchor_margin, run.values.back() - floor);
  }
  Outcome out;
  out.passed = anchor_margin >= -kTol;
  out.detail = std::to_string(runs) + " runs, worst slack " + Fmt(worst) +
               ", anchor margin " + Fmt(anchor_margin);
  return out;
}

// 3. Closed-form jump-start height against a grid search.
Outcome BestAlphaCriterion() {
  double worst = 0;
  for (double sigma : {0.0, 0.5, 1.0, 2.0, 4.0, 8.0}) {
    const double closed = BestAlpha(sigma);
    double best_alpha = 0;
    double best_value = -1;
    for (int i = 0; i < 10000; ++i) {
      const double alpha = i * 1e-4;
      const double value = BoundGeneral(alpha, sigma);
      if (value > best_value) {
        best_value = value;
        best_alpha = alpha;
      }
    }
    worst = std::max(worst, std::abs(closed - best_alpha));
  }
  Outcome out;
  out.passed = worst <= 1e-3;
  out.detail = "max |closed - grid| = " + Fmt(worst);
  return out;
}

struct CoverageRun {
  std::unique_ptr<Matroid> matroid;
  WeightedSetFamily bases;
  QuadraticCoverage coverage;
};

std::vector<CoverageRun> BuildCoverageRuns() {
  std::vector<CoverageRun> runs;
  SplitMix64 rng(4004);
  for (MatroidFamily family : kAllMatroidFamilies) {
    for (int trial = 0; trial < 25; ++trial) {
      CoverageRun run;
      run.matroid = RandomMatroid(family, rng, 2, /*wide_circuits=*/true);
      run.bases = RandomBasisDecomposition(
          *run.matroid, 1 + static_cast<int>(rng.NextInt(3)), rng);
      run.coverage = BuildQuadraticCoverage(*run.matroid, run.bases);
      runs.push_back(std::move(run));
    }
  }
  return runs;
}

// 4. Coverage family conditions and size bounds on 100 decompositions.
Outcome CoverageCriterion(const std::vector<CoverageRun>& runs) {
  double worst = -1e300;
  for (const auto& run : runs) {
    const auto& m = *run.matroid;
    const int c = *m.MinCircuitSize();
    if (c < 3) return {false, "drew a matroid with a short circuit"};
    const auto& cov = run.coverage;
    const auto& x = cov.source_point;
    const int n = m.NumElements();
    for (int u = 0; u < n; ++u) {
      double single = 0;
      for (const auto& e : cov.family.entries) {
        if (SubsetContains(e.set, u)) single += e.weight;
      }
      worst = std::max(worst, x[u] - single);
      for (int v = u + 1; v < n; ++v) {
        double both = 0;
        for (const auto& e : cov.family.entries) {
          if (SubsetContains(e.set, u) && SubsetContains(e.set, v)) {
            both += e.weight;
          }
        }
        worst = std::max(worst, x[u] * x[v] - both);
      }
    }
    const double budget = 3.0 + 2.0 * static_cast<double>(m.Rank()) / (c - 2);
    worst = std::max(worst, cov.total_weight - budget);
    if (cov.max_leftover > (c - 1) / 2) {
      return {false, "leftover block of " + std::to_string(cov.max_leftover)};
    }
  }
  Outcome out;
  out.passed = worst <= kTol;
  out.detail = std::to_string(runs.size()) + " decompositions, worst margin " +
               Fmt(worst);
  return out;
}

// 5. Coverage rounding certificate on the same 100 runs.
Outcome CoverageRoundingCriterion(const std::vector<CoverageRun>& runs) {
  SplitMix64 rng(5005);
  double worst = -1e300;
  for (const auto& run : runs) {
    const auto q = RandomDiversityObjective(run.matroid->NumElements(), rng);
    const auto rounded = RoundByCoverage(q, run.coverage);
    const int c = *run.matroid->MinCircuitSize();
    const double budget =
        3.0 + 2.0 * static_cast<double>(run.matroid->Rank()) / (c - 2);
    const double fractional = q.Value(run.coverage.source_point);
    worst = std::max(worst, fractional - rounded.value * budget);
  }
  Outcome out;
  out.passed = worst <= kTol;
  out.detail = "worst certificate slack " + Fmt(worst);
  return out;
}

// 6. Swap rounding: per-step losses and the final certificate on 100 runs.
Outcome SwapCriterion() {
  SplitMix64 rng(6006);
  double worst_step = -1e300;
  double worst_final = -1e300;
  int runs = 0;
  while (runs < 100) {
    const auto family = kAllMatroidFamilies[runs % kAllMatroidFamilies.size()];
    const auto m = RandomMatroid(family, rng, 2);
    const auto q = RandomDiversityObjective(m->NumElements(), rng);
    const auto bases = RandomBasisDecomposition(
        *m, 2 + static_cast<int>(rng.NextInt(2)), rng);
    const double sigma = EstimateSigma(q.A()).sigma;
    const auto result = SwapRound(q, *m, bases, sigma);
    worst_step = std::max(worst_step, result.worst_step_violation);
    const double certificate = 3.0 + 2.0 * sigma / (m->Rank() - 1);
    const double fractional = q.Value(bases.PointOf(q.Size()));
    worst_final =
        std::max(worst_final, fractional - certificate * result.value);
    ++runs;
  }
  Outcome out;
  out.passed = worst_step <= kTol && worst_final <= kTol;
  out.detail = "100 runs, worst step " + Fmt(worst_step) +
               ", worst certificate slack " + Fmt(worst_final);
  return out;
}

// 7. Full pipeline verification on random instances and all gap instances.
Outcome EndToEndCriterion() {
  SplitMix64 rng(7007);
  double worst = -1e300;
  int checks = 0;
  for (MatroidFamily family : kAllMatroidFamilies) {
    for (int trial = 0; trial < 50; ++trial) {
      Instance inst;
      inst.matroid = RandomMatroid(family, rng);
      inst.quadratic = RandomDiversityObjective(inst.matroid->NumElements(), rng);
      inst.meta.generator = MatroidFamilyName(family);
      GreedyConfig cfg;
      cfg.mode = GreedyMode::kOneStep;
      cfg.sigma = EstimateSigma(inst.quadratic->A()).sigma;
      const auto report = VerifyEndToEnd(inst, cfg);
      worst = std::max(worst, report.worst_violation);
      ++checks;
      if (!report.passed) {
        return {false, "failed on " + MatroidFamilyName(family) + ": " +
                           report.witness};
      }
    }
  }
  for (int k = 2; k <= 6; ++k) {
    for (int t = 1; t <= k; ++t) {
      auto gap = GenGapInstance(k, t, 4.0);
      Instance inst;
      inst.quadratic = gap.objective;
      inst.matroid = std::move(gap.matroid);
      inst.meta.generator = "gap";
      GreedyConfig cfg;
      cfg.mode = GreedyMode::kOneStep;
      cfg.sigma = EstimateSigma(inst.quadratic->A()).sigma;
      const auto report = VerifyEndToEnd(inst, cfg);
      worst = std::max(worst, report.worst_violation);
      ++checks;
      if (!report.passed) {
        return {false, "failed on gap k=" + std::to_string(k) +
                           " t=" + std::to_string(t) + ": " + report.witness};
      }
    }
  }
  Outcome out;
  out.passed = worst <= kTol;
  out.detail = std::to_string(checks) + " instances, worst violation " +
               Fmt(worst);
  return out;
}

// 8. Gap construction: closed-form optimum and the certified ratio bound.
Outcome GapCriterion() {
  double worst_gap = -1e300;
  double worst_exact = 0;
  int cells = 0;
  for (int k = 2; k <= 6; ++k) {
    for (int t = 2; t <= k; ++t) {
      for (double sigma0 : {1.0, 4.0, 16.0, 64.0}) {
        const auto gap = GenGapInstance(k, t, sigma0);
        const int r = gap.matroid->Rank();
        const int c = 2 * t;
        const auto best = BruteForceDiscreteOpt(gap.objective, *gap.matroid);
        const double closed =
            ((sigma0 - 1) * (c - 2) + static_cast<double>(r) * (r - 1)) /
            (2 * sigma0);
        worst_exact = std::max(worst_exact, std::abs(best.value - closed));
        worst_exact =
            std::max(worst_exact, std::abs(gap.planted_value - closed));
        const double measured = gap.fractional_value / best.value;
        const double lower = 0.25 * std::min(static_cast<double>(r) / (c - 2),
                                             sigma0 / r);
        worst_gap = std::max(worst_gap, lower - measured);
        ++cells;
      }
    }
  }
  Outcome out;
  out.passed = worst_gap <= kTol && worst_exact <= kTol;
  out.detail = std::to_string(cells) + " cells, brute force vs closed form " +
               Fmt(worst_exact) + ", ratio slack " + Fmt(worst_gap);
  return out;
}

// 9. Smoothness estimates across metric classes.
Outcome SigmaEstimateCriterion() {
  SplitMix64 rng(9009);
  double worst_metric = 0;
  double worst_squared = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 5 + static_cast<int>(rng.NextInt(8));
    const int dim = 2 + static_cast<int>(rng.NextInt(3));
    worst_metric = std::max(
        worst_metric,
        EstimateSigma(GenPoweredMetric(n, dim, 1.0, rng.Next()).A()).sigma);
  }
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 5 + static_cast<int>(rng.NextInt(8));
    worst_squared = std::max(
        worst_squared,
        EstimateSigma(GenNegativeType(n, 2 + static_cast<int>(rng.NextInt(3)),
                                      rng.Next())
                          .A())
            .sigma);
  }
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 5 + static_cast<int>(rng.NextInt(8));
    worst_squared = std::max(
        worst_squared,
        EstimateSigma(
            GenPoweredMetric(n, 2 + static_cast<int>(rng.NextInt(3)), 2.0,
                             rng.Next())
                .A())
            .sigma);
  }
  // Equality case: three equally spaced collinear points, squared distances.
  const double collinear =
      EstimateSigma({{0, 1, 4}, {1, 0, 1}, {4, 1, 0}}).sigma;
  Outcome out;
  out.passed = worst_metric <= 1.0 + 1e-12 && worst_squared <= 2.0 + 1e-12 &&
               collinear == 2.0;
  out.detail = "metric max " + Fmt(worst_metric) + ", squared max " +
               Fmt(worst_squared) + ", collinear " + Fmt(collinear);
  return out;
}

// 10. Procurement: monotonicity, copositivity, concavity, and the eta run.
Outcome ProcurementCriterion() {
  SplitMix64 rng(1010);
  int copositive_draws = 0;
  int concave_draws = 0;
  double worst_run = -1e300;
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 5 + static_cast<int>(rng.NextInt(6));
    const auto p = GenProcurement(n, 1 + static_cast<int>(rng.NextInt(3)),
                                  rng.Next(), 1.0 + rng.NextDouble());
    if (!p.MonotoneCheck()) return {false, "monotonicity failed"};
    if (!p.CopositiveSampled(500, rng.Next())) {
      return {false, "copositivity failed"};
    }
    copositive_draws += 500;
    for (int draw = 0; draw < 500; ++draw) {
      std::vector<double> x(n), u(n);
      for (double& v : x) v = 1e-3 + (1 - 1e-3) * rng.NextDouble();
      for (double& v : u) v = rng.NextDouble();
      if (!p.CheckOssDirect(x, u, 0.0)) {
        return {false, "direct check failed at sigma 0"};
      }
      ++concave_draws;
    }
  }
  // Local-smoothness runs with eta = n^3 max |C| against brute force.
  for (int trial = 0; trial < 5; ++trial) {
    const int n = 6 + static_cast<int>(rng.NextInt(5));
    const auto p = GenProcurement(n, 2, rng.Next(), 1.5);
    UniformMatroid m(n, 2 + static_cast<int>(rng.NextInt(n / 2)));
    GreedyConfig cfg;
    cfg.mode = GreedyMode::kEtaLocal;
    cfg.sigma = 0.0;
    cfg.eta = p.Eta();
    const auto run = RunJumpStart(p, m, cfg);
    for (size_t i = 1; i < run.values.size(); ++i) {
      if (run.values[i] < run.values[i - 1] - kTol) {
        return {false, "eta-local trajectory dipped"};
      }
    }
    const auto best = BruteForceDiscreteOpt(p, m);
    worst_run = std::max(
        worst_run, run.certified_bound * best.value - run.values.back());
  }
  Outcome out;
  out.passed = worst_run <= kTol;
  out.detail = std::to_string(copositive_draws) + "+" +
               std::to_string(concave_draws) +
               " draws, worst eta-run slack " + Fmt(worst_run);
  return out;
}

// 11. Exhaustive multilinear extension vs the quadratic closed form, and the
// decomposition identity.
Outcome MultilinearCriterion() {
  SplitMix64 rng(1111);
  double worst = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 4 + static_cast<int>(rng.NextInt(7));
    Matrix a(n, std::vector<double>(n, 0.0));
    std::vector<double> b(n);
    const bool signed_entries = trial % 2 == 1;
    for (int i = 0; i < n; ++i) {
      b[i] = signed_entries ? rng.NextDouble() * 2 - 1 : rng.NextDouble();
      for (int j = i + 1; j < n; ++j) {
        const double v =
            signed_entries ? rng.NextDouble() * 2 - 1 : rng.NextDouble();
        a[i][j] = a[j][i] = v;
      }
    }
    QuadraticObjective q(a, b);
    auto table = SetFunctionTable::FromFunction(
        n, [&](const Subset& s) { return q.ValueOfSet(s); });
    for (int probe = 0; probe < 3; ++probe) {
      std::vector<double> x(n);
      for (double& v : x) v = rng.NextDouble();
      const double exact = q.Value(x);
      const double expectation = table.ExactMultilinear(x);
      const double scale = std::max(1.0, std::abs(exact));
      worst = std::max(worst, std::abs(exact - expectation) / scale);
    }
    // Decomposition identity on a random weighted family.
    WeightedSetFamily family;
    double left = 1.0;
    for (int entry = 0; entry < 3; ++entry) {
      const double w = entry == 2 ? left : left * rng.NextDouble();
      left -= entry == 2 ? 0.0 : w;
      Subset s;
      for (int e = 0; e < n; ++e) {
        if (rng.NextBool()) s.push_back(e);
      }
      family.entries.push_back({w, s});
    }
    const auto sides = DecompositionIdentity(q, family);
    const double scale = std::max(1.0, std::abs(sides.lhs));
    worst = std::max(worst, std::abs(sides.lhs - sides.rhs) / scale);
  }
  Outcome out;
  out.passed = worst <= 1e-9;
  out.detail = "100 quadratics, worst relative error " + Fmt(worst);
  return out;
}

// 12. Byte-identical reports for repeated runs with the same seed.
Outcome DeterminismCriterion() {
  std::vector<std::string> firsts;
  std::vector<std::string> seconds;
  for (int round = 0; round < 2; ++round) {
    auto& sink = round == 0 ? firsts : seconds;
    {
      SplitMix64 rng(12);
      Instance inst;
      inst.quadratic = GenGraphSemimetric(
          7, GenRandomGraphEdges(7, 0.5, rng), 3.0);
      inst.matroid = std::make_unique<UniformMatroid>(7, 4);
      inst.meta.generator = "graph";
      inst.meta.seed = 12;
      SolveOptions opts;
      opts.brute_force = true;
      opts.with_timing = false;
      sink.push_back(CanonicalDump(Solve(inst, opts).ToJson()));
    }
    {
      auto gap = GenGapInstance(3, 2, 4.0);
      Instance inst;
      inst.quadratic = gap.objective;
      inst.matroid = std::move(gap.matroid);
      inst.meta.generator = "gap";
      SolveOptions opts;
      opts.with_timing = false;
      sink.push_back(CanonicalDump(Solve(inst, opts).ToJson()));
    }
    {
      Instance inst;
      inst.procurement = GenProcurement(6, 2, 99, 1.5);
      inst.matroid = std::make_unique<UniformMatroid>(6, 3);
      inst.meta.generator = "procurement";
      inst.meta.seed = 99;
      SolveOptions opts;
      opts.with_timing = false;
      sink.push_back(CanonicalDump(Solve(inst, opts).ToJson()));
    }
    {
      SweepRequest req;
      req.family = "gap";
      req.sizes = {2, 3};
      req.budgets = {2};
      req.sigma0 = {4.0};
      sink.push_back(RunSweep(req));
    }
  }
  Outcome out;
  out.passed = firsts == seconds;
  out.detail = out.passed ? "4 reports byte-identical across two runs"
                          : "reports diverged between runs";
  return out;
}

}  // namespace
}  // namespace ossmax

int main() {
  using ossmax::Outcome;
  int failures = 0;
  const auto emit = [&](int id, const std::string& label, const Outcome& out) {
    std::printf("%s criterion %2d: %s — %s\n", out.passed ? "PASS" : "FAIL",
                id, label.c_str(), out.detail.c_str());
    std::fflush(stdout);
    if (!out.passed) ++failures;
  };
  const auto guarded = [&](int id, const std::string& label,
                           const std::function<Outcome()>& fn) {
    Outcome out;
    try {
      out = fn();
    } catch (const std::exception& e) {
      out.passed = false;
      out.detail = std::string("exception: ") + e.what();
    }
    emit(id, label, out);
  };

  guarded(1, "gradient growth inequality across generators",
          ossmax::GradientGrowthCriterion);
  guarded(2, "greedy certificate vs brute force, alpha = 1/2",
          ossmax::GreedyGuaranteeCriterion);
  guarded(3, "closed-form jump-start height vs grid search",
          ossmax::BestAlphaCriterion);

  std::vector<ossmax::CoverageRun> coverage_runs;
  try {
    coverage_runs = ossmax::BuildCoverageRuns();
  } catch (const std::exception& e) {
    const Outcome failed{false, std::string("exception: ") + e.what()};
    emit(4, "coverage family conditions and size bounds", failed);
    emit(5, "coverage rounding certificate", failed);
  }
  if (!coverage_runs.empty()) {
    guarded(4, "coverage family conditions and size bounds",
            [&] { return ossmax::CoverageCriterion(coverage_runs); });
    guarded(5, "coverage rounding certificate",
            [&] { return ossmax::CoverageRoundingCriterion(coverage_runs); });
  }

  guarded(6, "swap rounding per-step and final certificates",
          ossmax::SwapCriterion);
  guarded(7, "end-to-end pipeline vs brute force",
          ossmax::EndToEndCriterion);
  guarded(8, "gap construction closed forms and ratio bound",
          ossmax::GapCriterion);
  guarded(9, "smoothness estimates across metric classes",
          ossmax::SigmaEstimateCriterion);
  guarded(10, "procurement checks and eta-local run",
          ossmax::ProcurementCriterion);
  guarded(11, "multilinear extension and decomposition identity",
          ossmax::MultilinearCriterion);
  guarded(12, "deterministic reports for a fixed seed",
          ossmax::DeterminismCriterion);

  if (failures == 0) {
    std::printf("all 12 criteria passed\n");
  } else {
    std::printf("%d criteria failed\n", failures);
  }
  return failures;
}
