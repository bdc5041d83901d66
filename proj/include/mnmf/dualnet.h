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

// The bidirected support network of a potential, feasible supports,
// movable cuts and steepest descent directions of the dual objective.
//
// Each vertex i is split into U_i:
//   terminal s           -> {s0}
//   x_i at the origin    -> {i^1, ..., i^k}, one node per branch
//   x_i off the origin   -> {i0 (inward side), i+ (outward side)}
// Tight edges (pi = 2d) are rewired between these nodes with boundary
// +chi +chi; i0 i+ carries the node flow with boundary -chi -chi, and every
// terminal gets a -chi -chi self-loop.

#ifndef MNMF_DUALNET_H_
#define MNMF_DUALNET_H_

#include <string>
#include <variant>
#include <vector>

#include "mnmf/bisubflow.h"
#include "mnmf/grid.h"
#include "mnmf/model.h"

namespace mnmf {

enum class NodeLabel { kBranch, kInner, kOuter, kTerminal };
enum class EdgeClass { kEqual, kMinus, kSelf };

struct SupportNode {
  int vertex = 0;
  NodeLabel label = NodeLabel::kTerminal;
  int branch = 0;  // for kBranch nodes
};

struct SupportNetwork {
  BidirectedNetwork net;
  std::vector<SupportNode> nodes;
  std::vector<EdgeClass> edge_class;
  // Original edge id for kEqual, vertex id for kMinus and kSelf.
  std::vector<int> edge_origin;
  // members[i] lists U_i: branch order at the origin, {i0, i+} off it.
  std::vector<std::vector<int>> members;
  // Rewired E= edge per original edge, or -1 if the edge is not tight.
  std::vector<int> equal_edge;
  std::vector<int> minus_edge;  // per vertex, or -1
  std::vector<int> self_edge;   // per vertex, or -1
};

// Throws InvariantError if p is not a potential or a tight edge joins two
// vertices at the same star point.
SupportNetwork BuildSupportNetwork(const Instance& inst,
                                   const std::vector<Int>& costs, Int M,
                                   const GridVector& p);

struct Support {
  std::vector<Int> psi2;  // per support-network edge
};

// Conditions for an (x, y)-feasible support; empty when all hold.
std::vector<std::string> CheckSupport(const Instance& inst,
                                      const GridVector& p,
                                      const SupportNetwork& sn,
                                      const Support& sup);

using SupportOutcome = std::variant<Support, BiViolation>;

SupportOutcome FindFeasibleSupport(const SupportNetwork& sn,
                                   SFStats* stats = nullptr);

// kappa-hat - beta.
Ext CutViolation(const SupportNetwork& sn, const BiCut& cut);

BiCut MakeMovable(const Instance& inst, const GridVector& p,
                  const SupportNetwork& sn, const BiCut& cut);

bool IsMovable(const Instance& inst, const GridVector& p,
               const SupportNetwork& sn, const BiCut& cut);

// Nodes of U_F (true) versus U_I (false).
std::vector<char> FSide(const GridVector& p, const SupportNetwork& sn);

struct SplitCut {
  BiCut f;
  BiCut i;
};
SplitCut SplitFI(const GridVector& p, const SupportNetwork& sn,
                 const BiCut& cut);

// Maps an F- or I-movable cut to the neighboring grid vector.  The result
// is not normalized and may leave the range window by one step.
GridVector ApplyCut(const Instance& inst, const GridVector& p, Int M,
                    const SupportNetwork& sn, const BiCut& cut);

struct Optimal {
  SupportNetwork network;
  Support support;
};

struct Descent {
  GridVector q;          // normalized
  Int delta2h = 0;       // 2h(p) - 2h(q) > 0
  bool chose_f = true;
  BiCut part;            // the applied movable part
  Int violation = 0;     // total violation of the maximum violating cut
};

using Direction = std::variant<Optimal, Descent>;

Direction SteepestDirection(const Instance& inst,
                            const std::vector<Int>& costs, Int M,
                            const GridVector& p, SFStats* stats = nullptr);

}  // namespace mnmf

#endif  // MNMF_DUALNET_H_
