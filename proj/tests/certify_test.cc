// Copyright 2026 The mnmf Authors
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


#include <random>
#include <vector>

#include "doctest.h"
#include "mnmf/certify.h"
#include "mnmf/solver.h"
#include "test_util.h"

namespace mnmf {
namespace {

using testing::StarInstance;

bool Mentions(const std::vector<std::string>& v, const std::string& what) {
  for (const std::string& s : v)
    if (s.find(what) != std::string::npos) return true;
  return false;
}

GridVector StarOptimum(Int M) {
  GridVector p = InitialPotential(StarInstance(), M, false);
  p[3] = GridPoint::Make(0, 0, 4);
  return p;
}

TEST_CASE("multiflow validity") {
  const Instance star = StarInstance();
  CHECK(CheckMultiflow(star, {}).empty());
  CHECK(CheckMultiflow(star, Canonicalize({{{0, 3, 1}, 2}})).empty());
  CHECK(Mentions(CheckMultiflow(star, Canonicalize({{{0, 3, 1}, 3}})),
                 "capacity exceeded"));
  CHECK(Mentions(CheckMultiflow(star, {{{{0, 3, 0}, 1}}}), "endpoints"));
  CHECK(Mentions(CheckMultiflow(star, {{{{0, 1}, 1}}}), "missing edge"));
  CHECK(Mentions(CheckMultiflow(star, {{{{0, 3, 1}, 0}}}), "nonpositive"));
}

TEST_CASE("slackness") {
  const Instance star = StarInstance();
  const std::vector<Int> d = {1, 1, 1};
  const Multiflow f = Canonicalize({{{0, 3, 1}, 2}});
  CHECK(CheckSlackness(star, d, StarOptimum(4), f).empty());
  // Larger costs leave the used edges slack.
  CHECK(Mentions(CheckSlackness(star, {2, 2, 2}, StarOptimum(4), f), "not tight"));
  // Half a unit through a hub at positive height.
  CHECK(Mentions(CheckSlackness(star, d, StarOptimum(4), Canonicalize({{{0, 3, 1}, 1}})),
                 "not saturated"));
}

TEST_CASE("duality gap on the star") {
  const Instance star = StarInstance();
  const Multiflow f = Canonicalize({{{0, 3, 1}, 2}});
  // 2h = 4 and 2 (M val - d(f)) = 2 (4 - 2).
  CHECK(DualityGap(star, {1, 1, 1}, 4, StarOptimum(4), f) == 0);
  CHECK(DualityGap(star, {1, 1, 1}, 4, InitialPotential(star, 4, false), f) == 4);
}

TEST_CASE("certificates") {
  const PreparedInstance prep(StarInstance());
  const SolveResult r = Solve(prep);
  CHECK(r.certificate.ok());
  CHECK(r.certificate.value2 == 2);
  CHECK(r.certificate.cost2_original == 4);
  CHECK(r.certificate.dual2h == prep.M * 2 - 4);

  Multiflow tampered = r.flow;
  tampered.paths[0].lambda2 += 1;
  const Certificate bad = Certify(prep, r.potential, tampered);
  CHECK_FALSE(bad.ok());
  CHECK(Mentions(bad.violations, "capacity"));

  const Certificate quick = Certify(prep, r.potential, r.flow, /*full=*/false);
  CHECK(quick.violations.empty());
  CHECK(quick.gap == 0);
}

TEST_CASE("solver certifies random instances") {
  std::mt19937_64 rng(61);
  testing::RandomSpec spec;
  spec.max_n = 20;
  spec.max_m = 36;
  spec.max_k = 6;
  spec.max_cap = 5;
  spec.max_cost = 10;
  for (int it = 0; it < 60; ++it) {
    const SolveResult r = Solve(testing::RandomInstance(rng, spec));
    CHECK(r.certificate.ok());
    CHECK(r.certified);
  }
}

}  // namespace
}  // namespace mnmf
