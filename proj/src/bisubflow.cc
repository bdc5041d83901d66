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

#include "mnmf/bisubflow.h"

namespace mnmf {

void BidirectedNetwork::Validate() const {
  for (const BiEdge& e : edges) {
    MNMF_CHECK(e.i >= 0 && e.i < num_nodes && e.j >= 0 && e.j < num_nodes,
               "edge endpoint out of range");
    MNMF_CHECK((e.sign_i == 1 || e.sign_i == -1) &&
                   (e.sign_j == 1 || e.sign_j == -1),
               "edge sign must be +1 or -1");
    MNMF_CHECK(e.i != e.j || e.sign_i == e.sign_j, "mixed-sign self-loop");
    MNMF_CHECK(e.lower <= e.upper, "lower bound above upper bound");
  }
  std::vector<int> seen(num_nodes, 0);
  for (const BiGroup& g : groups) {
    MNMF_CHECK(static_cast<int>(g.members.size()) == g.fn.size(),
               "group member count mismatch");
    for (int u : g.members) {
      MNMF_CHECK(u >= 0 && u < num_nodes, "group member out of range");
      MNMF_CHECK(seen[u]++ == 0, "node in two groups");
    }
  }
  for (int u = 0; u < num_nodes; ++u)
    MNMF_CHECK(seen[u] == 1, "node outside every group");
}

Ext BiCutValue(const BidirectedNetwork& net, const BiCut& cut) {
  Ext sum = 0;
  for (const BiEdge& e : net.edges) {
    const Int w = e.sign_i * cut[e.i] + e.sign_j * cut[e.j];
    if (w > 0) sum += e.lower.times(w);
    if (w < 0) sum += e.upper.times(w);
  }
  return sum;
}

Int BetaValue(const BidirectedNetwork& net, const BiCut& cut) {
  Int sum = 0;
  for (const BiGroup& g : net.groups) {
    Mask y = 0, z = 0;
    for (size_t l = 0; l < g.members.size(); ++l) {
      if (cut[g.members[l]] > 0) y |= Mask{1} << l;
      if (cut[g.members[l]] < 0) z |= Mask{1} << l;
    }
    sum += g.fn.Beta(y, z);
  }
  return sum;
}

namespace {

int SignedElement(int u, int sign) {
  return sign > 0 ? PlusElement(u) : MinusElement(u);
}

}  // namespace

DirectedSFNetwork SignedDouble(const BidirectedNetwork& net) {
  net.Validate();
  DirectedSFNetwork sf;
  sf.num_elements = 2 * net.num_nodes;
  sf.arcs.reserve(2 * net.edges.size());
  for (const BiEdge& e : net.edges) {
    sf.arcs.push_back({SignedElement(e.i, e.sign_i),
                       SignedElement(e.j, -e.sign_j), e.lower, e.upper});
    sf.arcs.push_back({SignedElement(e.j, e.sign_j),
                       SignedElement(e.i, -e.sign_i), e.lower, e.upper});
  }
  for (const BiGroup& g : net.groups) {
    SFGroup sg{g.fn, {}};
    for (int u : g.members) sg.elements.push_back(PlusElement(u));
    for (int u : g.members) sg.elements.push_back(MinusElement(u));
    sf.groups.push_back(std::move(sg));
  }
  return sf;
}

std::vector<Int> ProjectFlow(const BidirectedNetwork& net,
                             const std::vector<Int>& sf_flow) {
  MNMF_CHECK(sf_flow.size() == 2 * net.edges.size(), "flow size mismatch");
  std::vector<Int> psi2(net.edges.size());
  for (size_t e = 0; e < net.edges.size(); ++e)
    psi2[e] = sf_flow[2 * e] + sf_flow[2 * e + 1];
  return psi2;
}

std::vector<Int> Boundary2(const BidirectedNetwork& net,
                           const std::vector<Int>& psi2) {
  std::vector<Int> out(net.num_nodes, 0);
  for (size_t e = 0; e < net.edges.size(); ++e) {
    out[net.edges[e].i] += net.edges[e].sign_i * psi2[e];
    out[net.edges[e].j] += net.edges[e].sign_j * psi2[e];
  }
  return out;
}

BiCut UnderlineToCut(const ElementSet& x, int num_nodes) {
  MNMF_CHECK(static_cast<int>(x.size()) == 2 * num_nodes, "element set size");
  BiCut cut(num_nodes, 0);
  for (int u = 0; u < num_nodes; ++u) {
    const bool p = x[PlusElement(u)], m = x[MinusElement(u)];
    if (p && !m) cut[u] = 1;
    if (m && !p) cut[u] = -1;
  }
  return cut;
}

ElementSet CutToElements(const BiCut& cut) {
  ElementSet x(2 * cut.size(), 0);
  for (size_t u = 0; u < cut.size(); ++u) {
    if (cut[u] > 0) x[PlusElement(static_cast<int>(u))] = 1;
    if (cut[u] < 0) x[MinusElement(static_cast<int>(u))] = 1;
  }
  return x;
}

BFOutcome SolveBidirectedFlow(const BidirectedNetwork& net, SFStats* stats) {
  const DirectedSFNetwork sf = SignedDouble(net);
  SFOutcome out = SolveSubmodularFlow(sf, stats);
  if (auto* flow = std::get_if<SFFlow>(&out))
    return BiFlow{ProjectFlow(net, flow->flow)};
  const SFCut& sc = std::get<SFCut>(out);
  BiViolation v;
  v.cut = UnderlineToCut(sc.cut, net.num_nodes);
  const Ext kappa = BiCutValue(net, v.cut);
  MNMF_CHECK(kappa.finite(), "violating cut with infinite value");
  v.violation = kappa.value() - BetaValue(net, v.cut);
  MNMF_CHECK(v.violation == sc.violation,
             "bidirected cut value differs from the submodular flow cut");
  return v;
}

bool BruteInBisubmodularPolyhedron(const BidirectedNetwork& net,
                                   const std::vector<Int>& psi2) {
  const std::vector<Int> bd2 = Boundary2(net, psi2);
  for (const BiGroup& g : net.groups) {
    const int k = g.fn.size();
    MNMF_CHECK(k <= 12, "group too large for enumeration");
    // Enumerate (Y, Z) as base-3 digits.
    int total = 1;
    for (int t = 0; t < k; ++t) total *= 3;
    for (int code = 0; code < total; ++code) {
      Mask y = 0, z = 0;
      Int lhs2 = 0;
      int c = code;
      for (int t = 0; t < k; ++t, c /= 3) {
        if (c % 3 == 1) {
          y |= Mask{1} << t;
          lhs2 += bd2[g.members[t]];
        } else if (c % 3 == 2) {
          z |= Mask{1} << t;
          lhs2 -= bd2[g.members[t]];
        }
      }
      if (lhs2 > 2 * g.fn.Beta(y, z)) return false;
    }
  }
  return true;
}

}  // namespace mnmf
