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

#include "ossmax/solve.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ossmax/errors.hpp"
#include "ossmax/oracle.hpp"
#include "ossmax/rounding.hpp"

namespace ossmax {
namespace {

std::string FormatDouble(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string CsvQuote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

nlohmann::json SolveReport::ToJson() const {
  nlohmann::json cfg{{"alpha", config.alpha},
                     {"delta", config.delta},
                     {"mode", GreedyModeName(config.mode)},
                     {"sigma", config.sigma},
                     {"steps", config.steps}};
  if (config.mode == GreedyMode::kEtaLocal) cfg["eta"] = config.eta;
  nlohmann::json doc{{"certifiedBound", certified_bound},
                     {"config", std::move(cfg)},
                     {"fractionalValue", fractional_value},
                     {"instance",
                      {{"generator", meta.generator},
                       {"parameters", meta.parameters},
                       {"seed", meta.seed}}}};
  if (rounded_set.has_value()) doc["roundedSet"] = *rounded_set;
  if (rounded_value.has_value()) doc["roundedValue"] = *rounded_value;
  if (gap_certificate.has_value()) doc["gapCertificate"] = *gap_certificate;
  if (method.has_value()) doc["method"] = *method;
  if (brute_force_value.has_value()) doc["bruteForceValue"] = *brute_force_value;
  if (achieved_ratio.has_value()) doc["achievedRatio"] = *achieved_ratio;
  if (wall_time_ms.has_value()) doc["wallTimeMs"] = *wall_time_ms;
  return doc;
}

SolveReport Solve(const Instance& instance, const SolveOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  const Matroid& m = *instance.matroid;
  const bool diversity =
      instance.IsQuadratic() && instance.quadratic->IsDiversity();
  GreedyConfig cfg = opts.greedy;
  if (opts.auto_sigma) {
    cfg.sigma = instance.IsQuadratic()
                    ? EstimateSigma(instance.quadratic->A()).sigma
                    : 0.0;
  }
  if (opts.auto_mode) {
    cfg.mode = diversity ? GreedyMode::kOneStep : GreedyMode::kMultilinear;
  }
  if (cfg.mode == GreedyMode::kEtaLocal && !cfg.eta.has_value()) {
    if (instance.procurement.has_value()) {
      cfg.eta = instance.procurement->Eta();
    } else {
      throw InputError("eta-local mode needs an explicit eta");
    }
  }
  SolveReport report;
  report.meta = instance.meta;
  const GreedyRun run = RunJumpStart(instance.Objective(), m, cfg);
  report.config = run.config;
  report.fractional_value = run.values.back();
  report.certified_bound = run.certified_bound;
  if (opts.round && diversity) {
    const WeightedSetFamily bases = SaturateToBases(m, run.decomposition);
    const RoundBestResult rounded =
        RoundBest(*instance.quadratic, m, bases, run.config.sigma);
    report.rounded_set = rounded.set;
    report.rounded_value = rounded.value;
    report.gap_certificate = rounded.gap_certificate;
    report.method = rounded.method;
  }
  if (opts.brute_force) {
    const BruteForceResult best = BruteForceDiscreteOpt(instance.Objective(), m);
    report.brute_force_value = best.value;
    if (best.value > 0) {
      report.achieved_ratio =
          report.rounded_value.value_or(report.fractional_value) / best.value;
    }
  }
  if (opts.with_timing) {
    report.wall_time_ms = std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - start)
                              .count();
  }
  return report;
}

namespace {

struct SweepRow {
  std::string family, n, k, t, sigma0, power, dim, factors, seed, rank,
      min_circuit, sigma_estimate, alpha, delta, mode, steps,
      fractional_value, certified_bound, rounded_value, gap_certificate,
      method, brute_force_value, achieved_ratio, planted_value,
      analytic_ratio_lb, measured_gap_ratio, error;

  std::string Line() const {
    const std::string* cols[] = {
        &family,        &n,         &k,
        &t,             &sigma0,    &power,
        &dim,           &factors,   &seed,
        &rank,          &min_circuit, &sigma_estimate,
        &alpha,         &delta,     &mode,
        &steps,         &fractional_value, &certified_bound,
        &rounded_value, &gap_certificate, &method,
        &brute_force_value, &achieved_ratio, &planted_value,
        &analytic_ratio_lb, &measured_gap_ratio, &error};
    std::string line;
    for (std::size_t i = 0; i < std::size(cols); ++i) {
      if (i > 0) line += ',';
      line += *cols[i];
    }
    return line;
  }
};

void FillFromInstance(SweepRow& row, const Instance& instance) {
  row.rank = std::to_string(instance.matroid->Rank());
  const auto c = instance.matroid->MinCircuitSize();
  if (c.has_value()) row.min_circuit = std::to_string(*c);
}

void FillFromReport(SweepRow& row, const SolveReport& report) {
  row.sigma_estimate = FormatDouble(report.config.sigma);
  row.alpha = FormatDouble(report.config.alpha);
  row.delta = FormatDouble(report.config.delta);
  row.mode = GreedyModeName(report.config.mode);
  row.steps = std::to_string(report.config.steps);
  row.fractional_value = FormatDouble(report.fractional_value);
  row.certified_bound = FormatDouble(report.certified_bound);
  if (report.rounded_value.has_value()) {
    row.rounded_value = FormatDouble(*report.rounded_value);
  }
  if (report.gap_certificate.has_value()) {
    row.gap_certificate = FormatDouble(*report.gap_certificate);
  }
  if (report.method.has_value()) row.method = *report.method;
  if (report.brute_force_value.has_value()) {
    row.brute_force_value = FormatDouble(*report.brute_force_value);
  }
  if (report.achieved_ratio.has_value()) {
    row.achieved_ratio = FormatDouble(*report.achieved_ratio);
  }
}

SolveOptions CellOptions(const SweepRequest& req, int n) {
  SolveOptions opts;
  opts.brute_force = req.brute_force && n <= 16;
  opts.with_timing = false;
  return opts;
}

void SolveCell(const SweepRequest& req, Instance& instance, SweepRow& row) {
  FillFromInstance(row, instance);
  const SolveReport report =
      Solve(instance, CellOptions(req, instance.Size()));
  FillFromReport(row, report);
}

}  // namespace

std::string SweepCsvHeader() {
  return "family,n,k,t,sigma0,power,dim,factors,seed,rank,minCircuit,"
         "sigmaEstimate,alpha,delta,mode,steps,fractionalValue,"
         "certifiedBound,roundedValue,gapCertificate,method,bruteForceValue,"
         "achievedRatio,plantedValue,analyticRatioLB,measuredGapRatio,error";
}

std::string RunSweep(const SweepRequest& req) {
  std::ostringstream out;
  out << SweepCsvHeader() << "\n";
  const auto emit = [&out](SweepRow& row) { out << row.Line() << "\n"; };

  if (req.family == "graph") {
    for (int n : req.sizes) {
      for (double s0 : req.sigma0) {
        for (std::uint64_t seed : req.seeds) {
          SweepRow row;
          row.family = req.family;
          row.n = std::to_string(n);
          row.sigma0 = FormatDouble(s0);
          row.seed = std::to_string(seed);
          try {
            SplitMix64 rng(seed);
            Instance instance;
            instance.matroid = std::make_unique<UniformMatroid>(n, (n + 1) / 2);
            instance.quadratic.emplace(
                GenGraphSemimetric(n, GenRandomGraphEdges(n, 0.5, rng), s0));
            instance.meta = {req.family, {{"n", n}, {"sigma0", s0}}, seed};
            SolveCell(req, instance, row);
          } catch (const std::exception& e) {
            row.error = CsvQuote(e.what());
          }
          emit(row);
        }
      }
    }
  } else if (req.family == "negtype") {
    for (int n : req.sizes) {
      for (std::uint64_t seed : req.seeds) {
        SweepRow row;
        row.family = req.family;
        row.n = std::to_string(n);
        row.dim = std::to_string(req.dim);
        row.seed = std::to_string(seed);
        try {
          Instance instance;
          instance.matroid = std::make_unique<UniformMatroid>(n, (n + 1) / 2);
          instance.quadratic.emplace(GenNegativeType(n, req.dim, seed));
          instance.meta = {req.family, {{"n", n}, {"dim", req.dim}}, seed};
          SolveCell(req, instance, row);
        } catch (const std::exception& e) {
          row.error = CsvQuote(e.what());
        }
        emit(row);
      }
    }
  } else if (req.family == "powered") {
    for (int n : req.sizes) {
      for (double p : req.powers) {
        for (std::uint64_t seed : req.seeds) {
          SweepRow row;
          row.family = req.family;
          row.n = std::to_string(n);
          row.power = FormatDouble(p);
          row.dim = std::to_string(req.dim);
          row.seed = std::to_string(seed);
          try {
            Instance instance;
            instance.matroid = std::make_unique<UniformMatroid>(n, (n + 1) / 2);
            instance.quadratic.emplace(GenPoweredMetric(n, req.dim, p, seed));
            instance.meta = {
                req.family, {{"n", n}, {"dim", req.dim}, {"power", p}}, seed};
            SolveCell(req, instance, row);
          } catch (const std::exception& e) {
            row.error = CsvQuote(e.what());
          }
          emit(row);
        }
      }
    }
  } else if (req.family == "gap") {
    for (int k : req.sizes) {
      for (int t : req.budgets) {
        if (t < 1 || t > k) continue;
        for (double s0 : req.sigma0) {
          SweepRow row;
          row.family = req.family;
          row.n = std::to_string(2 * k);
          row.k = std::to_string(k);
          row.t = std::to_string(t);
          row.sigma0 = FormatDouble(s0);
          row.seed = "0";
          try {
            GapInstance gap = GenGapInstance(k, t, s0);
            const double measured_top = gap.objective.Value(gap.fractional_point);
            Instance instance;
            instance.matroid = std::move(gap.matroid);
            instance.quadratic.emplace(std::move(gap.objective));
            instance.meta = {
                req.family, {{"k", k}, {"t", t}, {"sigma0", s0}}, 0};
            FillFromInstance(row, instance);
            const SolveReport report =
                Solve(instance, CellOptions(req, instance.Size()));
            FillFromReport(row, report);
            row.planted_value = FormatDouble(gap.planted_value);
            row.analytic_ratio_lb = FormatDouble(gap.analytic_ratio_lb);
            const double denom =
                report.brute_force_value.value_or(gap.planted_value);
            if (denom > 0) {
              row.measured_gap_ratio = FormatDouble(measured_top / denom);
            }
          } catch (const std::exception& e) {
            row.error = CsvQuote(e.what());
          }
          emit(row);
        }
      }
    }
  } else if (req.family == "procurement") {
    for (int n : req.sizes) {
      for (std::uint64_t seed : req.seeds) {
        SweepRow row;
        row.family = req.family;
        row.n = std::to_string(n);
        row.factors = std::to_string(req.factors);
        row.seed = std::to_string(seed);
        try {
          Instance instance;
          instance.matroid = std::make_unique<UniformMatroid>(n, (n + 1) / 2);
          instance.procurement.emplace(
              GenProcurement(n, req.factors, seed, 1.5));
          instance.meta = {
              req.family, {{"n", n}, {"factors", req.factors}}, seed};
          SolveCell(req, instance, row);
        } catch (const std::exception& e) {
          row.error = CsvQuote(e.what());
        }
        emit(row);
      }
    }
  } else {
    throw InputError("unknown sweep family: " + req.family);
  }
  return out.str();
}

}  // namespace ossmax
