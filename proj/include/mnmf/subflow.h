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

// Submodular flow feasibility with a separable submodular function.
//
// Finds phi with lower <= phi <= upper and boundary in B(rho), where
// (boundary phi)(u) = out-flow minus in-flow, or a maximum violating cut X
// maximizing kappa(X) - rho(X).

#ifndef MNMF_SUBFLOW_H_
#define MNMF_SUBFLOW_H_

#include <variant>
#include <vector>

#include "mnmf/extended.h"
#include "mnmf/group_function.h"

namespace mnmf {

struct SFArc {
  int tail = 0;
  int head = 0;
  Ext lower = 0;
  Ext upper = 0;
};

struct SFGroup {
  SignedGroupFunction fn;
  std::vector<int> elements;  // elements[local index] = ground element
};

struct DirectedSFNetwork {
  int num_elements = 0;
  std::vector<SFArc> arcs;
  std::vector<SFGroup> groups;

  // Throws InvariantError unless groups partition the ground set, bounds
  // are ordered and every group has rho(full) = 0.
  void Validate() const;
};

using ElementSet = std::vector<char>;  // membership flags over the ground

// Sum of lower bounds leaving X minus upper bounds entering X.
Ext CutValue(const DirectedSFNetwork& net, const ElementSet& x);

// Sum over groups of rho_g(X restricted to g).
Int RhoValue(const DirectedSFNetwork& net, const ElementSet& x);

std::vector<Int> Boundary(const DirectedSFNetwork& net,
                          const std::vector<Int>& flow);

struct SFFlow {
  std::vector<Int> flow;  // per arc
};

struct SFCut {
  ElementSet cut;
  Int violation = 0;  // kappa(X) - rho(X) > 0
};

using SFOutcome = std::variant<SFFlow, SFCut>;

struct SFStats {
  int augmentations = 0;
  int searches = 0;
};

// Augmenting-path algorithm; deterministic for a fixed input ordering.
SFOutcome SolveSubmodularFlow(const DirectedSFNetwork& net,
                              SFStats* stats = nullptr);

// Brute force over all subsets; for tests on small ground sets.
struct BruteCut {
  Ext best = Ext::NegInf();
  ElementSet argmax;
};
BruteCut BruteMaxViolation(const DirectedSFNetwork& net);

// True iff flow respects bounds and its boundary lies in B(rho), checked
// group by group by exhaustive subset enumeration.
bool BruteIsFeasibleFlow(const DirectedSFNetwork& net,
                         const std::vector<Int>& flow);

}  // namespace mnmf

#endif  // MNMF_SUBFLOW_H_
