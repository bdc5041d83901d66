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

// Bidirected flow with a separable reducible bisubmodular function, solved
// through the signed doubling into submodular flow.
//
// Node u of the bidirected network becomes ground elements 2u (u+) and
// 2u + 1 (u-).  An edge with boundary s_i chi_i + s_j chi_j becomes the two
// arcs i^{s_i} -> j^{-s_j} and j^{s_j} -> i^{-s_i}; 2 psi(e) is their total
// flow.

#ifndef MNMF_BISUBFLOW_H_
#define MNMF_BISUBFLOW_H_

#include <variant>
#include <vector>

#include "mnmf/extended.h"
#include "mnmf/group_function.h"
#include "mnmf/subflow.h"

namespace mnmf {

struct BiEdge {
  int i = 0;
  int j = 0;
  int sign_i = +1;
  int sign_j = +1;
  Ext lower = 0;
  Ext upper = Ext::PosInf();
};

struct BiGroup {
  SignedGroupFunction fn;
  std::vector<int> members;  // members[local] = bidirected node
};

struct BidirectedNetwork {
  int num_nodes = 0;
  std::vector<BiEdge> edges;
  std::vector<BiGroup> groups;

  // Mixed-sign self-loops and non-partitioning groups are rejected.
  void Validate() const;
};

// A cut (Y, Z) over the nodes, stored as a sign per node:
// +1 for Y, -1 for Z, 0 for neither.
using BiCut = std::vector<int>;

inline int PlusElement(int u) { return 2 * u; }
inline int MinusElement(int u) { return 2 * u + 1; }

// kappa-hat(Y, Z).
Ext BiCutValue(const BidirectedNetwork& net, const BiCut& cut);

// beta(Y, Z) = sum over groups of rho_g(Y+ u Z-).
Int BetaValue(const BidirectedNetwork& net, const BiCut& cut);

DirectedSFNetwork SignedDouble(const BidirectedNetwork& net);

// 2 psi(e) = phi(A_e).
std::vector<Int> ProjectFlow(const BidirectedNetwork& net,
                             const std::vector<Int>& sf_flow);

// Doubled boundary: 2 (boundary psi)(u) = sum over e of 2 psi(e) * sign.
std::vector<Int> Boundary2(const BidirectedNetwork& net,
                           const std::vector<Int>& psi2);

// Drops complementary pairs and reads X as Y+ u Z-.
BiCut UnderlineToCut(const ElementSet& x, int num_nodes);

// The signed set Y+ u Z-.
ElementSet CutToElements(const BiCut& cut);

struct BiFlow {
  std::vector<Int> psi2;  // per edge, 2 psi
};

struct BiViolation {
  BiCut cut;
  Int violation = 0;  // kappa-hat - beta
};

using BFOutcome = std::variant<BiFlow, BiViolation>;

BFOutcome SolveBidirectedFlow(const BidirectedNetwork& net,
                              SFStats* stats = nullptr);

// True iff z = boundary/2 satisfies z(Y) - z(Z) <= beta(Y, Z) on every
// group, by enumeration of all (Y, Z) pairs.  Test oracle.
bool BruteInBisubmodularPolyhedron(const BidirectedNetwork& net,
                                   const std::vector<Int>& psi2);

}  // namespace mnmf

#endif  // MNMF_BISUBFLOW_H_
