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


#include <string>
#include <vector>

#include "doctest.h"
#include "mnmf/model.h"
#include "test_util.h"

namespace mnmf {
namespace {

using testing::StarInstance;

const char* kStar =
    "mnmf 4 3 3\n"
    "node 4 1\n"
    "edge 1 4 1\n"
    "edge 2 4 1\n"
    "edge 3 4 1\n";

GridPoint P(int branch, Int r2, Int y2) { return GridPoint::Make(branch, r2, y2); }

TEST_CASE("parse the star file") {
  const Instance inst = ParseInstance(kStar);
  CHECK(inst.n() == 4);
  CHECK(inst.m() == 3);
  CHECK(inst.k() == 3);
  CHECK(inst.capacity(3) == 1);
  CHECK(inst.edge_between(3, 1) == 1);
  CHECK(inst.edge_between(0, 1) == -1);
  CHECK(ParseInstance(FormatInstance(inst)).edges().size() == 3);
  CHECK(FormatInstance(ParseInstance(FormatInstance(inst))) == FormatInstance(inst));
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(ParseInstance("mnmf 4 1 3\nnode 4 1\nedge 1 2 5\n"), ParseError);
  CHECK_THROWS_AS(ParseInstance("mnmf 3 1 2\nnode 3 1\nedge 1 3 1\n"), ParseError);
  CHECK_THROWS_AS(ParseInstance("mnmf 4 2 3\nnode 4 1\nedge 1 4 1\n"), ParseError);
  CHECK_THROWS_AS(ParseInstance("mnmf 4 1 3\nedge 1 4 1\n"), ParseError);
  CHECK_THROWS_AS(ParseInstance("mnmf 4 1 3\nnode 4 -1\nedge 1 4 1\n"), ParseError);
  CHECK_THROWS_AS(ParseInstance("mnmf 4 1 3\nnode 4 1\nedge 1 4 x\n"), ParseError);
  CHECK_THROWS_AS(ParseInstance("mnmf 4 2 3\nnode 4 1\nedge 1 4 1\nedge 4 1 2\n"),
                  ParseError);
  CHECK_THROWS_AS(ParseInstance(""), ParseError);
  // Comments and blank lines are fine.
  CHECK(ParseInstance(std::string("# star\n\n") + kStar).m() == 3);
}

TEST_CASE("cost perturbation") {
  CHECK(PerturbCosts(StarInstance()) == std::vector<Int>{1, 1, 1});
  // C = 2, one zero edge, one edge of cost 3.
  const Instance a(5, 3, {{0, 3, 0}, {1, 3, 3}, {2, 4, 1}, {3, 4, 2}},
                   {0, 0, 0, 2, 1});
  CHECK(PerturbCosts(a) == std::vector<Int>{1, 15, 5, 10});
  const Instance b(4, 3, {{0, 3, 0}, {1, 3, 0}, {2, 3, 0}}, {0, 0, 0, 1});
  CHECK(PerturbCosts(b) == std::vector<Int>{1, 1, 1});
}

TEST_CASE("scaling choice") {
  CHECK(PowerOfTwoAbove(2) == 4);
  CHECK(PowerOfTwoAbove(0) == 1);
  CHECK(PowerOfTwoAbove(4) == 8);
  const Instance star = StarInstance();
  ScaleChoice sc = ChooseM(star, {1, 1, 1});
  CHECK(sc.M == 4);
  CHECK(sc.mu == 2);
  const Instance c3(4, 3, {{0, 3, 5}, {1, 3, 1}, {2, 3, 1}}, {0, 0, 0, 3});
  sc = ChooseM(c3, PerturbCosts(c3));
  CHECK(sc.M == 32);
  CHECK(sc.mu == 5);
  const Instance c0(4, 3, {{0, 3, 1}, {1, 3, 1}, {2, 3, 1}}, {0, 0, 0, 0});
  sc = ChooseM(c0, PerturbCosts(c0));
  CHECK(sc.M == 1);
  CHECK(sc.mu == 0);
}

TEST_CASE("objective weight dominates any flow cost") {
  const Instance star = StarInstance();
  // Sum of capacities 1, max cost 1: above 4 and never below ChooseM.
  CHECK(ObjectiveM(star, {1, 1, 1}) == 8);
  const PreparedInstance prep(star);
  CHECK(prep.M == 8);
  CHECK(prep.mu == 2);
  CHECK(prep.zero_edges == 0);
}

TEST_CASE("initial potentials") {
  const Instance star = StarInstance();
  GridVector p = InitialPotential(star, 1, /*phase_start=*/true);
  CHECK(p[3] == P(0, 0, 0));
  CHECK(Dual2h(star, p) == 0);
  CHECK(HEval2(star, {1, 1, 1}, 1, p) == 0);
  p = InitialPotential(star, 4, /*phase_start=*/false);
  CHECK(p[3] == P(0, 0, 8));
  CHECK(Dual2h(star, p) == 8);
  CHECK(p[1] == P(2, 8, 0));
  CHECK(TerminalPoint(1, 4) == P(2, 8, 0));
  for (Int d : {1, 5, 40})
    CHECK(IsPotential(star, {d, d, d}, 4, p));
}

TEST_CASE("potential conditions") {
  const Instance star = StarInstance();
  GridVector p = InitialPotential(star, 4, false);
  p[3] = P(0, 0, 0);  // pi = 4 > 2
  CHECK_FALSE(IsPotential(star, {1, 1, 1}, 4, p));
  CHECK_FALSE(HEval2(star, {1, 1, 1}, 4, p).has_value());
  p[3] = P(0, 0, -2);
  CHECK_FALSE(IsPotential(star, {9, 9, 9}, 4, p));
  p[3] = P(0, 0, 4);  // the optimum of the star at M = 4
  CHECK(HEval2(star, {1, 1, 1}, 4, p) == 4);
  p[0] = P(1, 6, 0);  // terminal moved
  CHECK_FALSE(IsPotential(star, {9, 9, 9}, 4, p));
}

TEST_CASE("normalization pulls points into range") {
  const Instance star = StarInstance();
  const std::vector<Int> d = {1, 1, 1};
  GridVector p = InitialPotential(star, 4, false);
  CHECK(NormalizePotential(star, d, 4, p) == p);

  p[3] = P(1, 10, 14);  // radius M + 1
  REQUIRE(IsPotential(star, d, 4, p, /*check_range=*/false));
  REQUIRE_FALSE(IsPotential(star, d, 4, p));
  GridVector q = NormalizePotential(star, d, 4, p);
  CHECK(q[3] == P(1, 8, 14));
  CHECK(IsPotential(star, d, 4, q));
  CHECK(Dual2h(star, q) == Dual2h(star, p));

  p[3] = P(1, 9, 13);  // radius M + 1/2
  REQUIRE(IsPotential(star, d, 4, p, false));
  q = NormalizePotential(star, d, 4, p);
  CHECK(q[3] == P(1, 7, 13));
  CHECK(IsPotential(star, d, 4, q));
}

}  // namespace
}  // namespace mnmf
