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

#include "ossmax/instances.hpp"

#include <cmath>
#include <set>
#include <vector>

#include "doctest.h"
#include "ossmax/canonical_json.hpp"
#include "ossmax/errors.hpp"
#include "ossmax/matroid.hpp"
#include "ossmax/objective.hpp"
#include "ossmax/rng.hpp"

namespace ossmax {

TEST_CASE("graph scores are two-level") {
  const auto q = GenGraphSemimetric(4, {{0, 1}, {2, 3}}, 3.0);
  CHECK(q.IsDiversity());
  CHECK(q.A()[0][1] == 6.0);
  CHECK(q.A()[1][0] == 6.0);
  CHECK(q.A()[2][3] == 6.0);
  CHECK(q.A()[0][2] == 1.0);
  CHECK(q.A()[1][3] == 1.0);
  CHECK(q.A()[0][0] == 0.0);
  for (double b : q.B()) CHECK(b == 0.0);
  // An edge with both endpoints away from a third vertex pins the estimate:
  // 2 sigma0 against a detour of 1 + 1.
  CHECK(EstimateSigma(q.A()).sigma == 3.0);

  CHECK_THROWS_AS(GenGraphSemimetric(3, {}, 0.5), InputError);
  CHECK_THROWS_AS(GenGraphSemimetric(3, {{0, 3}}, 2.0), InputError);
  CHECK_THROWS_AS(GenGraphSemimetric(3, {{1, 1}}, 2.0), InputError);
}

TEST_CASE("negative-type scores are squared distances") {
  const auto q = GenNegativeType(6, 3, 42);
  CHECK(q.Size() == 6);
  CHECK(q.IsDiversity());
  // Within twice-a-metric, so the triple scan never exceeds two.
  CHECK(EstimateSigma(q.A()).sigma <= 2.0 + 1e-12);
  // Same seed, same instance; different seed, different instance.
  CHECK(GenNegativeType(6, 3, 42).A() == q.A());
  CHECK(GenNegativeType(6, 3, 43).A() != q.A());
}

TEST_CASE("powered metrics interpolate between metric and squared") {
  const auto metric = GenPoweredMetric(7, 2, 1.0, 5);
  CHECK(EstimateSigma(metric.A()).sigma <= 1.0 + 1e-12);
  const auto squared = GenPoweredMetric(7, 2, 2.0, 5);
  CHECK(EstimateSigma(squared.A()).sigma <= 2.0 + 1e-12);
  // Same points under the hood: entries are the metric raised elementwise.
  for (int i = 0; i < 7; ++i) {
    for (int j = 0; j < 7; ++j) {
      CHECK(squared.A()[i][j] ==
            doctest::Approx(metric.A()[i][j] * metric.A()[i][j]));
    }
  }
  CHECK_THROWS_AS(GenPoweredMetric(5, 2, 0.5, 1), InputError);
}

TEST_CASE("collinear equal spacing makes the squared bound tight") {
  // Points 0, 1, 2 on a line, squared distances.
  const Matrix squared = {{0, 1, 4}, {1, 0, 1}, {4, 1, 0}};
  CHECK(EstimateSigma(squared).sigma == 2.0);
  // Cubed distances push the scan to 4.
  const Matrix cubed = {{0, 1, 8}, {1, 0, 1}, {8, 1, 0}};
  CHECK(EstimateSigma(cubed).sigma == 4.0);
}

TEST_CASE("gap instances carry exact closed forms") {
  for (int k = 2; k <= 4; ++k) {
    for (int t = 2; t <= k; ++t) {
      for (double sigma0 : {1.0, 4.0, 16.0}) {
        const auto gap = GenGapInstance(k, t, sigma0);
        const int r = gap.matroid->Rank();
        const int c = 2 * t;
        CHECK(r == k + t - 1);
        CHECK(gap.matroid->MinCircuitSize() == c);
        CHECK(gap.objective.IsDiversity());

        // Planted value from the closed form.
        const double planted =
            ((sigma0 - 1) * (c - 2) + static_cast<double>(r) * (r - 1)) /
            (2 * sigma0);
        CHECK(gap.planted_value == doctest::Approx(planted).epsilon(1e-12));

        // Fractional point: r/(2k) everywhere, value k q^2 (1 + 2(k-1)/sigma0).
        const double qq = static_cast<double>(r) / (2 * k);
        for (double v : gap.fractional_point) {
          CHECK(v == doctest::Approx(qq));
        }
        const double frac = k * qq * qq * (1 + 2.0 * (k - 1) / sigma0);
        CHECK(gap.fractional_value == doctest::Approx(frac).epsilon(1e-12));
        CHECK(gap.objective.Value(gap.fractional_point) ==
              doctest::Approx(gap.fractional_value).epsilon(1e-9));

        // The analytic bound never exceeds the measured ratio.
        CHECK(gap.fractional_value / gap.planted_value >=
              gap.analytic_ratio_lb - 1e-9);
        const double lb = 0.25 * std::min(static_cast<double>(r) / (c - 2),
                                          sigma0 / r);
        CHECK(gap.analytic_ratio_lb == doctest::Approx(lb).epsilon(1e-12));

        // Pair scores: 1 inside a designated pair, 1/sigma0 across pairs.
        CHECK(gap.objective.A()[0][1] == 1.0);
        CHECK(gap.objective.A()[0][2] == doctest::Approx(1.0 / sigma0));
        // The scan sees ratio 1 / (2 / sigma0) between two cross detours.
        if (k >= 2) {
          CHECK(EstimateSigma(gap.objective.A()).sigma ==
                doctest::Approx(sigma0 / 2));
        }
      }
    }
  }
  // Budget t = 1 is allowed (circuits of size 2); t > k is not.
  CHECK(GenGapInstance(3, 1, 2.0).matroid->MinCircuitSize() == 2);
  CHECK_THROWS_AS(GenGapInstance(3, 4, 2.0), InputError);
  CHECK_THROWS_AS(GenGapInstance(2, 2, 0.5), InputError);
}

TEST_CASE("procurement instances are monotone by construction") {
  for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
    const auto p = GenProcurement(7, 2, seed, 1.0);
    CHECK(p.MonotoneCheck());
    CHECK(p.CopositiveSampled(500, seed));
    // C = collusion + G^T G entry by entry.
    const int n = p.Size();
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        double gram = 0;
        for (size_t f = 0; f < p.G().size(); ++f) {
          gram += p.G()[f][i] * p.G()[f][j];
        }
        CHECK(p.C()[i][j] ==
              doctest::Approx(p.Collusion()[i][j] + gram).epsilon(1e-12));
      }
    }
  }
  CHECK(GenProcurement(5, 2, 9, 1.0).Bids() ==
        GenProcurement(5, 2, 9, 1.0).Bids());
  // Scaling bids up preserves monotonicity.
  CHECK(GenProcurement(5, 2, 9, 2.5).MonotoneCheck());
}

TEST_CASE("random graphs are simple and deterministic") {
  SplitMix64 rng(5);
  const auto edges = GenRandomGraphEdges(8, 0.4, rng);
  std::set<std::pair<int, int>> seen;
  for (const auto& [u, v] : edges) {
    CHECK(u < v);
    CHECK(v < 8);
    CHECK(u >= 0);
    CHECK(seen.insert({u, v}).second);
  }
  SplitMix64 replay(5);
  CHECK(GenRandomGraphEdges(8, 0.4, replay) == edges);
  SplitMix64 all(1);
  CHECK(GenRandomGraphEdges(5, 1.0, all).size() == 10);
  SplitMix64 none(1);
  CHECK(GenRandomGraphEdges(5, 0.0, none).empty());
}

TEST_CASE("instances round trip through json") {
  SUBCASE("quadratic instance") {
    Instance inst;
    inst.matroid = std::make_unique<UniformMatroid>(4, 2);
    inst.quadratic = GenGraphSemimetric(4, {{0, 1}, {1, 2}}, 2.0);
    inst.meta.generator = "graph";
    inst.meta.parameters = {{"n", 4}, {"sigma0", 2.0}};
    inst.meta.seed = 7;
    const auto doc = inst.ToJson();
    const auto parsed = Instance::FromJson(doc);
    CHECK(parsed.IsQuadratic());
    CHECK(parsed.quadratic->A() == inst.quadratic->A());
    CHECK(parsed.matroid->ToJson() == inst.matroid->ToJson());
    CHECK(parsed.meta.generator == "graph");
    CHECK(parsed.meta.seed == 7);
    // Canonical serialization is stable under a round trip.
    CHECK(CanonicalDump(parsed.ToJson()) == CanonicalDump(doc));
  }
  SUBCASE("procurement instance") {
    Instance inst;
    inst.matroid = std::make_unique<UniformMatroid>(5, 2);
    inst.procurement = GenProcurement(5, 2, 3, 1.5);
    inst.meta.generator = "procurement";
    const auto parsed = Instance::FromJson(inst.ToJson());
    CHECK_FALSE(parsed.IsQuadratic());
    CHECK(parsed.procurement->Bids() == inst.procurement->Bids());
    CHECK(parsed.Size() == 5);
  }
  SUBCASE("malformed documents are rejected") {
    CHECK_THROWS_AS(Instance::FromJson({{"matroid", "nope"}}), InputError);
    nlohmann::json doc = {{"matroid", {{"type", "uniform"}, {"n", 3}, {"r", 1}}}};
    // An instance needs exactly one objective.
    CHECK_THROWS_AS(Instance::FromJson(doc), InputError);
  }
}

}  // namespace ossmax
