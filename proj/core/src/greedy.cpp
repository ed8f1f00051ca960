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

#include "ossmax/greedy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "ossmax/errors.hpp"
#include "ossmax/tolerances.hpp"

namespace ossmax {

namespace {

// Per-step gain fraction mu: a gradient step recovers at least mu times the
// remaining gap. Quadratics have vanishing third derivatives and get the
// stronger value; sigma = 0 means no curvature against us at all.
double MuFor(bool third_order, double alpha, double sigma) {
  if (sigma == 0) return 1.0;
  if (third_order) return alpha / (alpha + sigma);
  return std::pow(alpha / (alpha + 1.0), 2.0 * sigma);
}

int StepsFromDelta(double delta) {
  if (!(delta > 0) || delta > 1) {
    throw InputError("step size must lie in (0, 1]");
  }
  const double inverse = 1.0 / delta;
  const double rounded = std::round(inverse);
  if (std::abs(inverse - rounded) > 1e-9 * std::max(1.0, rounded)) {
    throw StepNotDivisibleError("1/delta must be an integer, delta = " +
                                std::to_string(delta));
  }
  return static_cast<int>(rounded);
}

double LargestSoundDelta(double cap) {
  if (cap >= 1.0) return 1.0;
  return 1.0 / std::ceil(1.0 / cap);
}

}  // namespace

std::string GreedyModeName(GreedyMode mode) {
  switch (mode) {
    case GreedyMode::kOneStep:
      return "one-step";
    case GreedyMode::kMultilinear:
      return "multilinear";
    case GreedyMode::kEtaLocal:
      return "eta-local";
  }
  throw InputError("unknown greedy mode");
}

GreedyMode GreedyModeFromName(const std::string& name) {
  if (name == "one-step") return GreedyMode::kOneStep;
  if (name == "multilinear") return GreedyMode::kMultilinear;
  if (name == "eta-local") return GreedyMode::kEtaLocal;
  throw InputError("unknown greedy mode: " + name);
}

double BestAlpha(double sigma) {
  if (sigma < 0) throw InputError("sigma must be non-negative");
  if (sigma == 0) return 0.0;
  return (-(2.0 * sigma + 1.0) +
          std::sqrt(4.0 * sigma * sigma + 12.0 * sigma + 1.0)) /
         2.0;
}

double BoundGeneral(double alpha, double sigma) {
  if (alpha < 0 || alpha >= 1) throw InputError("alpha must lie in [0, 1)");
  if (sigma < 0) throw InputError("sigma must be non-negative");
  return 1.0 -
         std::exp(-(1.0 - alpha) *
                  std::pow(alpha / (alpha + 1.0), 2.0 * sigma));
}

double BoundThirdOrder(double alpha, double sigma) {
  if (alpha < 0 || alpha >= 1) throw InputError("alpha must lie in [0, 1)");
  if (sigma < 0) throw InputError("sigma must be non-negative");
  if (alpha == 0 && sigma == 0) {
    throw InputError("bound undefined at alpha = sigma = 0");
  }
  return 1.0 - std::exp(-alpha * (1.0 - alpha) / (alpha + sigma));
}

ResolvedGreedyConfig ResolveConfig(const GreedyConfig& cfg, bool third_order,
                                   int n) {
  if (n < 1) throw InputError("objective must have at least one element");
  if (cfg.sigma < 0) throw InputError("sigma must be non-negative");
  ResolvedGreedyConfig out;
  out.mode = cfg.mode;
  out.sigma = cfg.sigma;
  out.third_order = third_order;
  out.alpha = cfg.alpha.value_or(third_order ? 0.5 : BestAlpha(cfg.sigma));
  if (out.alpha < 0 || out.alpha >= 1) {
    throw InputError("alpha must lie in [0, 1)");
  }
  out.mu = MuFor(third_order, out.alpha, out.sigma);

  const double rest = 1.0 - out.alpha;
  const double inf = std::numeric_limits<double>::infinity();
  const double mu_cap = out.mu > 0 ? 1.0 / (rest * out.mu) : inf;
  switch (cfg.mode) {
    case GreedyMode::kOneStep:
      if (cfg.delta && *cfg.delta != 1.0) {
        throw InputError("one-step mode uses delta = 1");
      }
      out.delta = 1.0;
      break;
    case GreedyMode::kMultilinear: {
      const double cap =
          std::min(rest / (static_cast<double>(n) * n * n), mu_cap);
      out.delta = cfg.delta.value_or(LargestSoundDelta(cap));
      break;
    }
    case GreedyMode::kEtaLocal: {
      if (!cfg.eta) throw InputError("eta-local mode needs eta");
      out.eta = *cfg.eta;
      if (out.eta < 0) throw InputError("eta must be non-negative");
      const double eta_cap =
          out.eta > 0 ? 1.0 / (n * out.eta * rest) : inf;
      out.delta = cfg.delta.value_or(
          LargestSoundDelta(std::min(eta_cap, mu_cap)));
      break;
    }
  }
  out.steps = StepsFromDelta(out.delta);
  return out;
}

double DiscretizationFactor(const ResolvedGreedyConfig& cfg, int n) {
  const double rest = 1.0 - cfg.alpha;
  double factor = 0;
  switch (cfg.mode) {
    case GreedyMode::kOneStep:
      factor = 1.0 - std::exp(-rest * cfg.mu);
      break;
    case GreedyMode::kMultilinear: {
      const double slack =
          1.0 - static_cast<double>(n) * n * cfg.delta / rest;
      factor = (1.0 - std::exp(-0.5 * rest * cfg.mu)) * slack;
      break;
    }
    case GreedyMode::kEtaLocal: {
      const double slack = 1.0 - cfg.eta * cfg.delta * rest;
      factor = (1.0 - std::exp(-rest * cfg.mu)) * slack;
      break;
    }
  }
  return std::max(0.0, factor);
}

GreedyRun RunJumpStart(const FirstOrderObjective& f, const Matroid& m,
                       const GreedyConfig& cfg) {
  const int n = f.Size();
  if (n != m.NumElements()) {
    throw InputError("objective and matroid sizes differ");
  }
  if (m.Rank() < 1) throw InputError("matroid must have positive rank");

  GreedyRun run;
  run.config = ResolveConfig(cfg, f.HasNonPositiveThirdDerivatives(), n);
  const double alpha = run.config.alpha;
  const double delta = run.config.delta;
  const double step_mass = delta * (1.0 - alpha);

  // The largest basis doubles as the l1-maximal vertex of the polytope.
  const Subset start_basis = m.MaxWeightIndependent(
      std::vector<double>(n, 1.0));
  std::vector<double> x(n, 0.0);
  for (int e : start_basis) x[e] = alpha;

  run.iterates.push_back(x);
  run.values.push_back(f.Value(x));
  run.decomposition.entries.push_back({alpha, start_basis});

  for (int step = 0; step < run.config.steps; ++step) {
    const std::vector<double> g = f.Gradient(x);
    for (int i = 0; i < n; ++i) {
      if (g[i] < -kIneqTol) {
        throw NonMonotoneGradientError(
            "gradient entry " + std::to_string(i) + " is " +
            std::to_string(g[i]) + " at step " + std::to_string(step));
      }
    }
    const Subset vertex = m.MaxWeightIndependent(g);
    for (int e : vertex) x[e] += step_mass;
    run.vertices.push_back(vertex);
    run.iterates.push_back(x);
    run.values.push_back(f.Value(x));
    run.decomposition.entries.push_back({step_mass, vertex});
  }

  run.final_point = x;
  run.certified_bound = DiscretizationFactor(run.config, n);
  return run;
}

}  // namespace ossmax
