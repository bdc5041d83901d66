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


#include <algorithm>
#include <random>
#include <variant>
#include <vector>

#include "doctest.h"
#include "mnmf/bisubflow.h"

namespace mnmf {
namespace {

// Nodes 0..n-1, each its own zero-forcing group.
BidirectedNetwork ZeroNetwork(int n) {
  BidirectedNetwork net;
  net.num_nodes = n;
  for (int u = 0; u < n; ++u)
    net.groups.push_back({SignedGroupFunction::ZeroForcing(), {u}});
  return net;
}

TEST_CASE("bidirected cut values") {
  BidirectedNetwork net = ZeroNetwork(2);
  net.edges.push_back({0, 1, +1, +1});
  CHECK(BiCutValue(net, {0, 0}) == Ext(0));
  CHECK(BiCutValue(net, {1, 0}) == Ext(0));
  CHECK(BiCutValue(net, {-1, 0}) == Ext::NegInf());
  net.edges[0].lower = 2;
  CHECK(BiCutValue(net, {1, 1}) == Ext(4));  // <boundary, chi> = 2
  CHECK(BetaValue(net, {1, -1}) == 0);
}

TEST_CASE("signed doubling") {
  BidirectedNetwork net = ZeroNetwork(3);
  net.edges.push_back({0, 1, +1, +1});
  net.edges.push_back({0, 1, -1, -1});
  net.edges.push_back({2, 2, -1, -1});
  const DirectedSFNetwork sf = SignedDouble(net);
  REQUIRE(sf.arcs.size() == 6);
  auto arc = [&](int a) { return std::pair{sf.arcs[a].tail, sf.arcs[a].head}; };
  CHECK(arc(0) == std::pair{PlusElement(0), MinusElement(1)});
  CHECK(arc(1) == std::pair{PlusElement(1), MinusElement(0)});
  CHECK(arc(2) == std::pair{MinusElement(0), PlusElement(1)});
  CHECK(arc(3) == std::pair{MinusElement(1), PlusElement(0)});
  CHECK(arc(4) == std::pair{MinusElement(2), PlusElement(2)});
  CHECK(arc(5) == std::pair{MinusElement(2), PlusElement(2)});
  CHECK(sf.num_elements == 6);
}

TEST_CASE("mixed-sign self-loops are rejected") {
  BidirectedNetwork net = ZeroNetwork(1);
  net.edges.push_back({0, 0, +1, -1});
  CHECK_THROWS_AS(net.Validate(), InvariantError);
}

TEST_CASE("projection of doubled flows") {
  BidirectedNetwork net = ZeroNetwork(2);
  net.edges.push_back({0, 1, +1, +1});
  CHECK(ProjectFlow(net, {0, 0}) == std::vector<Int>{0});
  CHECK(ProjectFlow(net, {1, 0}) == std::vector<Int>{1});
  CHECK(ProjectFlow(net, {1, 1}) == std::vector<Int>{2});
  CHECK(Boundary2(net, {3}) == std::vector<Int>{3, 3});
}

TEST_CASE("underline reading of element sets") {
  ElementSet x(6, 0);
  x[PlusElement(0)] = x[MinusElement(0)] = x[PlusElement(1)] = 1;
  CHECK(UnderlineToCut(x, 3) == BiCut{0, 1, 0});
  x.assign(6, 0);
  x[PlusElement(0)] = x[MinusElement(1)] = 1;
  CHECK(UnderlineToCut(x, 3) == BiCut{1, -1, 0});
  CHECK(CutToElements({1, -1, 0}) == x);
  CHECK(UnderlineToCut(ElementSet(6, 0), 3) == BiCut{0, 0, 0});
}

TEST_CASE("no edges is feasible") {
  const BFOutcome out = SolveBidirectedFlow(ZeroNetwork(4));
  REQUIRE(std::holds_alternative<BiFlow>(out));
  CHECK(std::get<BiFlow>(out).psi2.empty());
}

Ext BruteMaxBiViolation(const BidirectedNetwork& net) {
  Ext best = Ext::NegInf();
  BiCut cut(net.num_nodes, -1);
  for (;;) {
    const Ext v = BiCutValue(net, cut) - Ext(BetaValue(net, cut));
    best = std::max(best, v);
    int u = 0;
    while (u < net.num_nodes && cut[u] == 1) cut[u++] = -1;
    if (u == net.num_nodes) break;
    ++cut[u];
  }
  return best;
}

TEST_CASE("random bidirected networks match brute force") {
  std::mt19937_64 rng(23);
  auto uni = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  int flows = 0, cuts = 0;
  for (int it = 0; it < 300; ++it) {
    BidirectedNetwork net;
    const int g = uni(3, 4);
    const Int c = uni(0, 2);
    net.groups.push_back({uni(0, 1) ? SignedGroupFunction::Tight(g, c)
                                    : SignedGroupFunction::NodeFlowing(g, c),
                          {}});
    for (int u = 0; u < g; ++u) net.groups[0].members.push_back(u);
    const int extra = uni(1, 3);
    net.num_nodes = g + extra;
    for (int u = g; u < net.num_nodes; ++u)
      net.groups.push_back({SignedGroupFunction::ZeroForcing(), {u}});
    const int m = uni(1, 7);
    for (int e = 0; e < m; ++e) {
      BiEdge be;
      be.i = uni(0, net.num_nodes - 1);
      be.j = uni(0, net.num_nodes - 1);
      be.sign_i = uni(0, 1) ? 1 : -1;
      be.sign_j = be.i == be.j ? be.sign_i : (uni(0, 1) ? 1 : -1);
      be.lower = uni(0, 1);
      be.upper = uni(0, 2) == 0 ? Ext::PosInf() : be.lower + Ext(uni(0, 2));
      net.edges.push_back(be);
    }
    const Ext brute = BruteMaxBiViolation(net);
    const BFOutcome out = SolveBidirectedFlow(net);
    if (brute <= Ext(0)) {
      REQUIRE(std::holds_alternative<BiFlow>(out));
      const std::vector<Int>& psi2 = std::get<BiFlow>(out).psi2;
      for (size_t e = 0; e < psi2.size(); ++e) {
        CHECK(net.edges[e].lower.times(2) <= Ext(psi2[e]));
        CHECK(Ext(psi2[e]) <= net.edges[e].upper.times(2));
      }
      CHECK(BruteInBisubmodularPolyhedron(net, psi2));
      ++flows;
    } else {
      REQUIRE(std::holds_alternative<BiViolation>(out));
      const BiViolation& v = std::get<BiViolation>(out);
      CHECK(Ext(v.violation) == brute);
      CHECK(BiCutValue(net, v.cut) - Ext(BetaValue(net, v.cut)) == brute);
      ++cuts;
    }
  }
  CHECK(flows > 30);
  CHECK(cuts > 30);
}

}  // namespace
}  // namespace mnmf
