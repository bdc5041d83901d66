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

#include "mnmf/dualnet.h"

#include <algorithm>
#include <sstream>

namespace mnmf {

namespace {

bool AtOrigin(const Instance& inst, const GridVector& p, int i) {
  return !inst.is_terminal(i) && p[i].x.is_origin();
}

// Node of U_a that faces vertex b along a tight edge.
int FacingNode(const SupportNetwork& sn, const GridVector& p, int a, int b) {
  const StarPoint& xa = p[a].x;
  const StarPoint& xb = p[b].x;
  MNMF_CHECK(xa != xb, "tight edge between coincident star points");
  const std::vector<int>& u = sn.members[a];
  if (u.size() == 1) return u[0];  // terminal
  if (xa.is_origin()) return u[xb.branch - 1];
  if (xb.is_origin() || xb.branch != xa.branch) return u[0];
  return xa.radius2 < xb.radius2 ? u[1] : u[0];
}

struct Counts {
  int in_y = 0;
  int in_z = 0;
  int size = 0;
};

Counts CountsAt(const SupportNetwork& sn, const BiCut& cut, int i) {
  Counts c;
  c.size = static_cast<int>(sn.members[i].size());
  for (int u : sn.members[i]) {
    c.in_y += cut[u] > 0;
    c.in_z += cut[u] < 0;
  }
  return c;
}

void ClearZ(const SupportNetwork& sn, BiCut& cut, int i) {
  for (int u : sn.members[i])
    if (cut[u] < 0) cut[u] = 0;
}

}  // namespace

SupportNetwork BuildSupportNetwork(const Instance& inst,
                                   const std::vector<Int>& costs, Int M,
                                   const GridVector& p) {
  MNMF_CHECK(IsPotential(inst, costs, M, p), "support network of a non-potential");
  SupportNetwork sn;
  const int n = inst.n();
  const int k = inst.k();
  sn.members.resize(n);
  auto add_node = [&](int i, NodeLabel label, int branch) {
    sn.members[i].push_back(static_cast<int>(sn.nodes.size()));
    sn.nodes.push_back({i, label, branch});
  };
  for (int i = 0; i < n; ++i) {
    if (inst.is_terminal(i)) {
      add_node(i, NodeLabel::kTerminal, 0);
    } else if (p[i].x.is_origin()) {
      for (int b = 1; b <= k; ++b) add_node(i, NodeLabel::kBranch, b);
    } else {
      add_node(i, NodeLabel::kInner, 0);
      add_node(i, NodeLabel::kOuter, 0);
    }
  }
  BidirectedNetwork& net = sn.net;
  net.num_nodes = static_cast<int>(sn.nodes.size());
  auto add_edge = [&](BiEdge e, EdgeClass cls, int origin) {
    net.edges.push_back(e);
    sn.edge_class.push_back(cls);
    sn.edge_origin.push_back(origin);
    return static_cast<int>(net.edges.size()) - 1;
  };

  sn.equal_edge.assign(inst.m(), -1);
  for (int e = 0; e < inst.m(); ++e) {
    const Edge& ed = inst.edges()[e];
    if (Pi2(p[ed.u], p[ed.v]) != 4 * costs[e]) continue;
    sn.equal_edge[e] = add_edge({FacingNode(sn, p, ed.u, ed.v),
                                 FacingNode(sn, p, ed.v, ed.u), +1, +1, 0,
                                 Ext::PosInf()},
                                EdgeClass::kEqual, e);
  }
  sn.minus_edge.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    if (inst.is_terminal(i) || p[i].x.is_origin()) continue;
    const Int c = inst.capacity(i);
    sn.minus_edge[i] = add_edge({sn.members[i][0], sn.members[i][1], -1, -1,
                                 p[i].y2 > 0 ? c : 0, c},
                                EdgeClass::kMinus, i);
  }
  sn.self_edge.assign(n, -1);
  for (int s = 0; s < k; ++s) {
    const int u = sn.members[s][0];
    sn.self_edge[s] =
        add_edge({u, u, -1, -1, 0, Ext::PosInf()}, EdgeClass::kSelf, s);
  }

  for (int i = 0; i < n; ++i) {
    if (AtOrigin(inst, p, i)) {
      const Int c = inst.capacity(i);
      net.groups.push_back({p[i].y2 > 0 ? SignedGroupFunction::Tight(k, c)
                                        : SignedGroupFunction::NodeFlowing(k, c),
                            sn.members[i]});
    } else {
      for (int u : sn.members[i])
        net.groups.push_back({SignedGroupFunction::ZeroForcing(), {u}});
    }
  }
  net.Validate();
  return sn;
}

std::vector<std::string> CheckSupport(const Instance& inst,
                                      const GridVector& p,
                                      const SupportNetwork& sn,
                                      const Support& sup) {
  std::vector<std::string> out;
  auto fail = [&](const std::string& what, int where) {
    std::ostringstream s;
    s << what << " at " << where;
    out.push_back(s.str());
  };
  if (sup.psi2.size() != sn.net.edges.size()) {
    out.push_back("support size mismatch");
    return out;
  }
  for (size_t e = 0; e < sup.psi2.size(); ++e) {
    const BiEdge& be = sn.net.edges[e];
    if (Ext(sup.psi2[e]) < be.lower.times(2) ||
        Ext(sup.psi2[e]) > be.upper.times(2))
      fail("bound violated", static_cast<int>(e));
  }
  const std::vector<Int> bd2 = Boundary2(sn.net, sup.psi2);
  for (int i = 0; i < inst.n(); ++i) {
    if (!AtOrigin(inst, p, i)) {
      for (int u : sn.members[i])
        if (bd2[u] != 0) fail("nonzero boundary", i);
      continue;
    }
    Int total = 0, top = 0;
    for (int u : sn.members[i]) {
      total += bd2[u];
      top = std::max(top, bd2[u]);
    }
    if (2 * top > total) fail("branch exceeds the other branches", i);
    if (total % 2 != 0) fail("odd node boundary", i);
    const Int cap4 = 4 * inst.capacity(i);
    if (total > cap4) fail("node capacity exceeded", i);
    if (p[i].y2 > 0 && total != cap4) fail("positive height but not saturated", i);
  }
  return out;
}

SupportOutcome FindFeasibleSupport(const SupportNetwork& sn, SFStats* stats) {
  BFOutcome out = SolveBidirectedFlow(sn.net, stats);
  if (auto* flow = std::get_if<BiFlow>(&out)) return Support{flow->psi2};
  return std::get<BiViolation>(out);
}

Ext CutViolation(const SupportNetwork& sn, const BiCut& cut) {
  return BiCutValue(sn.net, cut) - Ext(BetaValue(sn.net, cut));
}

BiCut MakeMovable(const Instance& inst, const GridVector& p,
                  const SupportNetwork& sn, const BiCut& cut) {
  const Ext before = CutViolation(sn, cut);
  MNMF_CHECK(before > Ext(0), "make_movable on a non-violating cut");
  BiCut out = cut;
  const int k = inst.k();
  // (A)
  for (int s = 0; s < k; ++s) {
    MNMF_CHECK(out[sn.members[s][0]] <= 0, "terminal node in Y");
    ClearZ(sn, out, s);
  }
  // (B)
  for (int i = k; i < inst.n(); ++i)
    if (p[i].y2 == 0 && CountsAt(sn, out, i).in_y == 0) ClearZ(sn, out, i);
  // (C)
  for (int i = k; i < inst.n(); ++i) {
    if (!p[i].x.is_origin()) continue;
    const Counts c = CountsAt(sn, out, i);
    if (c.in_y <= 1 && c.in_z >= 1 && c.in_z <= k - 2) ClearZ(sn, out, i);
  }
  // (D)
  for (int i = k; i < inst.n(); ++i) {
    if (!p[i].x.is_origin()) continue;
    if (CountsAt(sn, out, i).in_y >= 2)
      for (int u : sn.members[i]) out[u] = 1;
  }
  MNMF_CHECK(CutViolation(sn, out) == before, "make_movable changed the violation");
  MNMF_CHECK(IsMovable(inst, p, sn, out), "make_movable output not movable");
  return out;
}

bool IsMovable(const Instance& inst, const GridVector& p,
               const SupportNetwork& sn, const BiCut& cut) {
  for (int i = 0; i < inst.n(); ++i) {
    const Counts c = CountsAt(sn, cut, i);
    if (inst.is_terminal(i)) {
      if (c.in_y != 0 || c.in_z != 0) return false;
      continue;
    }
    const int L = c.size;
    const bool list1 = (c.in_y == L && c.in_z == 0) ||
                       (c.in_y == 1 && c.in_z == 0) ||
                       (c.in_y == 1 && c.in_z == L - 1) ||
                       (c.in_y == 0 && c.in_z == 0);
    const bool list2 = c.in_y == 0 && (c.in_z == L - 1 || c.in_z == L);
    if (!list1 && !(p[i].y2 > 0 && list2)) return false;
  }
  return true;
}

std::vector<char> FSide(const GridVector& p, const SupportNetwork& sn) {
  std::vector<char> f(sn.nodes.size(), 1);
  for (size_t v = 0; v < sn.nodes.size(); ++v) {
    const SupportNode& node = sn.nodes[v];
    if (node.label == NodeLabel::kTerminal) continue;
    switch (ParityOf(p[node.vertex])) {
      case Parity::kEven:
        break;
      case Parity::kOdd:
        f[v] = 0;
        break;
      case Parity::kNonIntEven:
        f[v] = node.label == NodeLabel::kOuter;
        break;
      case Parity::kNonIntOdd:
        f[v] = node.label == NodeLabel::kInner;
        break;
    }
  }
  return f;
}

SplitCut SplitFI(const GridVector& p, const SupportNetwork& sn,
                 const BiCut& cut) {
  const std::vector<char> f = FSide(p, sn);
  SplitCut out{BiCut(cut.size(), 0), BiCut(cut.size(), 0)};
  for (size_t v = 0; v < cut.size(); ++v) (f[v] ? out.f : out.i)[v] = cut[v];
  return out;
}

GridVector ApplyCut(const Instance& inst, const GridVector& p, Int M,
                    const SupportNetwork& sn, const BiCut& cut) {
  GridVector q = p;
  for (int s = 0; s < inst.k(); ++s) q[s] = TerminalPoint(s, M);
  for (int i = inst.k(); i < inst.n(); ++i) {
    const Counts c = CountsAt(sn, cut, i);
    const int L = c.size;
    auto toward = [&](int node, Int eps2) {
      const SupportNode& sv = sn.nodes[node];
      switch (sv.label) {
        case NodeLabel::kBranch:
          return MoveStar(p[i].x, sv.branch, eps2);
        case NodeLabel::kInner:
          return MoveStar(p[i].x, 0, eps2);
        default:
          return MoveStar(p[i].x, p[i].x.branch, eps2);
      }
    };
    auto first_with = [&](auto pred) {
      for (int u : sn.members[i])
        if (pred(cut[u])) return u;
      throw InvariantError("apply_cut: empty selection");
    };
    if (c.in_y == 0 && c.in_z == 0) continue;
    if (c.in_y == L && c.in_z == 0) {
      q[i].y2 += 2;
    } else if (c.in_y == 0 && c.in_z == L) {
      q[i].y2 -= 2;
    } else if (c.in_y == 1 && c.in_z == 0) {
      q[i] = {toward(first_with([](int s) { return s > 0; }), 1), p[i].y2 + 1};
    } else if (c.in_y == 0 && c.in_z == L - 1) {
      q[i] = {toward(first_with([](int s) { return s == 0; }), 1), p[i].y2 - 1};
    } else if (c.in_y == 1 && c.in_z == L - 1) {
      q[i] = {toward(first_with([](int s) { return s > 0; }), 2), p[i].y2};
    } else {
      throw InvariantError("apply_cut: shape is not movable");
    }
  }
  return q;
}

Direction SteepestDirection(const Instance& inst,
                            const std::vector<Int>& costs, Int M,
                            const GridVector& p, SFStats* stats) {
  SupportNetwork sn = BuildSupportNetwork(inst, costs, M, p);
  SupportOutcome outcome = FindFeasibleSupport(sn, stats);
  if (auto* sup = std::get_if<Support>(&outcome))
    return Optimal{std::move(sn), std::move(*sup)};

  const BiViolation& viol = std::get<BiViolation>(outcome);
  const BiCut cut = MakeMovable(inst, p, sn, viol.cut);
  const SplitCut split = SplitFI(p, sn, cut);
  const Ext vf = CutViolation(sn, split.f);
  const Ext vi = CutViolation(sn, split.i);
  MNMF_CHECK(vf.finite() && vi.finite(), "movable part with infinite cut value");
  MNMF_CHECK(vf.value() + vi.value() == viol.violation,
             "F/I violations are not additive");

  const Int h2 = Dual2h(inst, p);
  auto candidate = [&](const BiCut& part, Int v) {
    GridVector q = ApplyCut(inst, p, M, sn, part);
    MNMF_CHECK(IsPotential(inst, costs, M, q, /*check_range=*/false),
               "movable cut mapped to a non-potential");
    MNMF_CHECK(h2 - Dual2h(inst, q) == v, "descent identity violated");
    return q;
  };
  GridVector qf = candidate(split.f, vf.value());
  GridVector qi = candidate(split.i, vi.value());

  Descent d;
  d.chose_f = vf.value() >= vi.value();
  d.part = d.chose_f ? split.f : split.i;
  d.delta2h = d.chose_f ? vf.value() : vi.value();
  d.violation = viol.violation;
  MNMF_CHECK(d.delta2h > 0, "no strict descent at a non-optimal potential");
  d.q = NormalizePotential(inst, costs, M, d.chose_f ? qf : qi);
  return d;
}

}  // namespace mnmf
