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

#include "mnmf/subflow.h"

#include <algorithm>
#include <deque>
#include <limits>

namespace mnmf {

void DirectedSFNetwork::Validate() const {
  std::vector<int> owner(num_elements, -1);
  for (size_t g = 0; g < groups.size(); ++g) {
    const SFGroup& grp = groups[g];
    MNMF_CHECK(static_cast<int>(grp.elements.size()) == grp.fn.signed_size(),
               "group element count mismatch");
    MNMF_CHECK(grp.fn.Eval(grp.fn.full_mask()) == 0, "rho(full) != 0");
    for (int e : grp.elements) {
      MNMF_CHECK(e >= 0 && e < num_elements, "group element out of range");
      MNMF_CHECK(owner[e] == -1, "element in two groups");
      owner[e] = static_cast<int>(g);
    }
  }
  for (int e = 0; e < num_elements; ++e)
    MNMF_CHECK(owner[e] != -1, "element outside every group");
  for (const SFArc& a : arcs) {
    MNMF_CHECK(a.tail >= 0 && a.tail < num_elements && a.head >= 0 &&
                   a.head < num_elements,
               "arc endpoint out of range");
    MNMF_CHECK(a.lower <= a.upper, "lower bound above upper bound");
    MNMF_CHECK(!a.lower.is_pos_inf() && !a.upper.is_neg_inf(),
               "degenerate infinite bound");
  }
}

Ext CutValue(const DirectedSFNetwork& net, const ElementSet& x) {
  Ext sum = 0;
  for (const SFArc& a : net.arcs) {
    const bool t = x[a.tail], h = x[a.head];
    if (t && !h) sum += a.lower;
    if (!t && h) sum += -a.upper;
  }
  return sum;
}

Int RhoValue(const DirectedSFNetwork& net, const ElementSet& x) {
  Int sum = 0;
  for (const SFGroup& g : net.groups) {
    Mask m = 0;
    for (size_t l = 0; l < g.elements.size(); ++l)
      if (x[g.elements[l]]) m |= Mask{1} << l;
    sum += g.fn.Eval(m);
  }
  return sum;
}

std::vector<Int> Boundary(const DirectedSFNetwork& net,
                          const std::vector<Int>& flow) {
  std::vector<Int> out(net.num_elements, 0);
  for (size_t a = 0; a < net.arcs.size(); ++a) {
    out[net.arcs[a].tail] += flow[a];
    out[net.arcs[a].head] -= flow[a];
  }
  return out;
}

namespace {

constexpr Int kInf = std::numeric_limits<Int>::max() / 4;

Int Finite(const Ext& v) { return v.finite() ? v.value() : kInf; }

class SFSolver {
 public:
  explicit SFSolver(const DirectedSFNetwork& net) : net_(net) {
    const int n = net_.num_elements;
    group_of_.assign(n, -1);
    local_of_.assign(n, -1);
    for (size_t g = 0; g < net_.groups.size(); ++g)
      for (size_t l = 0; l < net_.groups[g].elements.size(); ++l) {
        group_of_[net_.groups[g].elements[l]] = static_cast<int>(g);
        local_of_[net_.groups[g].elements[l]] = static_cast<int>(l);
      }
    out_.assign(n, {});
    in_.assign(n, {});
    flow_.assign(net_.arcs.size(), 0);
    for (size_t a = 0; a < net_.arcs.size(); ++a) {
      const SFArc& arc = net_.arcs[a];
      out_[arc.tail].push_back(static_cast<int>(a));
      in_[arc.head].push_back(static_cast<int>(a));
      if (arc.lower.finite())
        flow_[a] = arc.lower.value();
      else if (arc.upper.finite())
        flow_[a] = arc.upper.value();
    }
    x_.assign(n, 0);
    for (const SFGroup& g : net_.groups) {
      std::vector<Int> base = g.fn.GreedyBase();
      for (size_t l = 0; l < base.size(); ++l) x_[g.elements[l]] = base[l];
    }
    excess_ = Boundary(net_, flow_);
    for (int e = 0; e < n; ++e) excess_[e] -= x_[e];
    ex_cache_.assign(net_.groups.size(), {});
    ex_valid_.assign(net_.groups.size(), false);
  }

  SFOutcome Run(SFStats* stats) {
    for (;;) {
      if (stats) ++stats->searches;
      if (!Search()) break;
      Augment();
      if (stats) ++stats->augmentations;
    }
    Int remaining = 0;
    for (Int g : excess_)
      if (g > 0) remaining += g;
    if (remaining == 0) return SFFlow{flow_};
    SFCut cut;
    cut.cut.assign(net_.num_elements, 0);
    for (int e = 0; e < net_.num_elements; ++e) cut.cut[e] = dist_[e] >= 0;
    cut.violation = remaining;
    return cut;
  }

 private:
  enum class Step { kNone, kArcDown, kArcUp, kExchange };

  const std::vector<Int>& Exchanges(int g) {
    if (!ex_valid_[g]) {
      const SFGroup& grp = net_.groups[g];
      const int L = grp.fn.signed_size();
      std::vector<Int>& m = ex_cache_[g];
      m.assign(static_cast<size_t>(L) * L, 0);
      if (grp.fn.kind() != GroupKind::kZeroForcing) {
        std::vector<Int> xs(L);
        for (int l = 0; l < L; ++l) xs[l] = x_[grp.elements[l]];
        for (int i = 0; i < L; ++i)
          for (int j = 0; j < L; ++j)
            if (i != j) m[i * L + j] = grp.fn.ExchangeCapacity(xs, i, j);
      }
      ex_valid_[g] = true;
    }
    return ex_cache_[g];
  }

  // Multi-source BFS from positive excess; true if a deficit is reached.
  bool Search() {
    const int n = net_.num_elements;
    dist_.assign(n, -1);
    prev_.assign(n, -1);
    step_.assign(n, Step::kNone);
    via_.assign(n, -1);
    sink_ = -1;
    std::deque<int> queue;
    for (int e = 0; e < n; ++e)
      if (excess_[e] > 0) {
        dist_[e] = 0;
        queue.push_back(e);
      }
    auto visit = [&](int from, int to, Step s, int via) {
      if (dist_[to] >= 0) return false;
      dist_[to] = dist_[from] + 1;
      prev_[to] = from;
      step_[to] = s;
      via_[to] = via;
      if (excess_[to] < 0) {
        sink_ = to;
        return true;
      }
      queue.push_back(to);
      return false;
    };
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int a : out_[u]) {
        const SFArc& arc = net_.arcs[a];
        if (arc.lower.finite() && flow_[a] <= arc.lower.value()) continue;
        if (visit(u, arc.head, Step::kArcDown, a)) return true;
      }
      for (int a : in_[u]) {
        const SFArc& arc = net_.arcs[a];
        if (arc.upper.finite() && flow_[a] >= arc.upper.value()) continue;
        if (visit(u, arc.tail, Step::kArcUp, a)) return true;
      }
      const int g = group_of_[u];
      const SFGroup& grp = net_.groups[g];
      if (grp.fn.kind() == GroupKind::kZeroForcing) continue;
      const std::vector<Int>& ex = Exchanges(g);
      const int L = grp.fn.signed_size();
      const int i = local_of_[u];
      for (int j = 0; j < L; ++j) {
        if (j == i || ex[i * L + j] <= 0) continue;
        if (visit(u, grp.elements[j], Step::kExchange, g)) return true;
      }
    }
    return false;
  }

  void Augment() {
    std::vector<int> path;  // sink back to source
    for (int v = sink_; v != -1; v = prev_[v]) path.push_back(v);
    const int source = path.back();
    Int delta = std::min(excess_[source], -excess_[sink_]);
    std::vector<int> exchange_groups;
    for (int v : path) {
      switch (step_[v]) {
        case Step::kArcDown: {
          const SFArc& arc = net_.arcs[via_[v]];
          delta = std::min(delta, flow_[via_[v]] - (arc.lower.finite()
                                                        ? arc.lower.value()
                                                        : -kInf));
          break;
        }
        case Step::kArcUp:
          delta = std::min(delta, Finite(net_.arcs[via_[v]].upper) -
                                      flow_[via_[v]]);
          break;
        case Step::kExchange: {
          const int g = via_[v];
          const int L = net_.groups[g].fn.signed_size();
          delta = std::min(delta, Exchanges(g)[local_of_[prev_[v]] * L +
                                               local_of_[v]]);
          exchange_groups.push_back(g);
          break;
        }
        case Step::kNone:
          break;
      }
    }
    std::sort(exchange_groups.begin(), exchange_groups.end());
    if (std::adjacent_find(exchange_groups.begin(), exchange_groups.end()) !=
        exchange_groups.end())
      delta = 1;
    MNMF_CHECK(delta > 0, "zero augmentation");
    for (int v : path) {
      switch (step_[v]) {
        case Step::kArcDown:
          flow_[via_[v]] -= delta;
          break;
        case Step::kArcUp:
          flow_[via_[v]] += delta;
          break;
        case Step::kExchange:
          x_[prev_[v]] += delta;
          x_[v] -= delta;
          ex_valid_[via_[v]] = false;
          break;
        case Step::kNone:
          break;
      }
    }
    excess_[source] -= delta;
    excess_[sink_] += delta;
  }

  const DirectedSFNetwork& net_;
  std::vector<int> group_of_, local_of_;
  std::vector<std::vector<int>> out_, in_;
  std::vector<Int> flow_, x_, excess_;
  std::vector<std::vector<Int>> ex_cache_;
  std::vector<bool> ex_valid_;
  std::vector<int> dist_, prev_, via_;
  std::vector<Step> step_;
  int sink_ = -1;
};

}  // namespace

SFOutcome SolveSubmodularFlow(const DirectedSFNetwork& net, SFStats* stats) {
  net.Validate();
  SFSolver solver(net);
  return solver.Run(stats);
}

BruteCut BruteMaxViolation(const DirectedSFNetwork& net) {
  MNMF_CHECK(net.num_elements <= 22, "ground set too large for brute force");
  BruteCut out;
  ElementSet x(net.num_elements, 0);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << net.num_elements); ++m) {
    for (int e = 0; e < net.num_elements; ++e) x[e] = (m >> e) & 1;
    const Ext v = CutValue(net, x) - Ext(RhoValue(net, x));
    if (v > out.best) {
      out.best = v;
      out.argmax = x;
    }
  }
  return out;
}

bool BruteIsFeasibleFlow(const DirectedSFNetwork& net,
                         const std::vector<Int>& flow) {
  if (flow.size() != net.arcs.size()) return false;
  for (size_t a = 0; a < flow.size(); ++a)
    if (Ext(flow[a]) < net.arcs[a].lower || Ext(flow[a]) > net.arcs[a].upper)
      return false;
  const std::vector<Int> bd = Boundary(net, flow);
  for (const SFGroup& g : net.groups) {
    std::vector<Int> xs;
    for (int e : g.elements) xs.push_back(bd[e]);
    if (!BruteInBase(g.fn, xs)) return false;
  }
  return true;
}

}  // namespace mnmf
