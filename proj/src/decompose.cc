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

#include "mnmf/decompose.h"

#include <algorithm>
#include <map>

namespace mnmf {

Int Multiflow::value2() const {
  Int v = 0;
  for (const FlowPath& p : paths) v += p.lambda2;
  return v;
}

Multiflow Canonicalize(std::vector<FlowPath> paths) {
  std::map<std::vector<int>, Int> merged;
  for (FlowPath& p : paths) {
    if (p.lambda2 == 0) continue;
    if (!p.vertices.empty() && p.vertices.front() > p.vertices.back())
      std::reverse(p.vertices.begin(), p.vertices.end());
    merged[std::move(p.vertices)] += p.lambda2;
  }
  Multiflow f;
  for (auto& [verts, l2] : merged) f.paths.push_back({verts, l2});
  return f;
}

Int Cost2(const Instance& inst, const std::vector<Int>& costs,
          const Multiflow& f) {
  Int total = 0;
  for (const FlowPath& p : f.paths) {
    Int len = 0;
    for (size_t t = 1; t < p.vertices.size(); ++t) {
      const int e = inst.edge_between(p.vertices[t - 1], p.vertices[t]);
      MNMF_CHECK(e >= 0, "path step is not an edge");
      len += costs[e];
    }
    total += p.lambda2 * len;
  }
  return total;
}

std::vector<Int> NodeFlow2(const Instance& inst, const Multiflow& f) {
  std::vector<Int> out(inst.n(), 0);
  for (const FlowPath& p : f.paths)
    for (size_t t = 1; t + 1 < p.vertices.size(); ++t)
      out[p.vertices[t]] += p.lambda2;
  return out;
}

namespace {

class Walker {
 public:
  Walker(const Instance& inst, const GridVector& p, const SupportNetwork& sn,
         const Support& sup)
      : inst_(inst), p_(p), sn_(sn), rem_(sup.psi2) {
    equal_at_.assign(sn.nodes.size(), {});
    for (size_t e = 0; e < sn.net.edges.size(); ++e) {
      if (sn.edge_class[e] != EdgeClass::kEqual) continue;
      equal_at_[sn.net.edges[e].i].push_back(static_cast<int>(e));
      equal_at_[sn.net.edges[e].j].push_back(static_cast<int>(e));
    }
  }

  Int Remaining(int node) const {
    Int w = 0;
    for (int e : equal_at_[node]) w += rem_[e];
    return w;
  }

  // One unit walk from terminal s.
  FlowPath Walk(int s) {
    FlowPath path{{s}, 1};
    int cur = sn_.members[s][0];
    for (;;) {
      MNMF_CHECK(static_cast<int>(path.vertices.size()) <= inst_.n(),
                 "decomposition walk does not terminate");
      const int e = FirstPositive(cur);
      MNMF_CHECK(e >= 0, "decomposition walk reached a dead end");
      --rem_[e];
      const BiEdge& be = sn_.net.edges[e];
      const int next = be.i == cur ? be.j : be.i;
      const int j = sn_.nodes[next].vertex;
      path.vertices.push_back(j);
      if (inst_.is_terminal(j)) break;
      if (!p_[j].x.is_origin()) {
        const int me = sn_.minus_edge[j];
        MNMF_CHECK(rem_[me] > 0, "node flow exhausted");
        --rem_[me];
        cur = sn_.members[j][0] == next ? sn_.members[j][1] : sn_.members[j][0];
      } else {
        int best = -1;
        Int best_w = 0;
        for (int u : sn_.members[j]) {
          if (u == next) continue;
          const Int w = Remaining(u);
          if (w > best_w) {
            best = u;
            best_w = w;
          }
        }
        MNMF_CHECK(best >= 0, "no exit branch with remaining weight");
        cur = best;
      }
    }
    std::vector<int> sorted = path.vertices;
    std::sort(sorted.begin(), sorted.end());
    MNMF_CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
               "decomposition walk repeats a vertex");
    return path;
  }

 private:
  int FirstPositive(int node) const {
    for (int e : equal_at_[node])
      if (rem_[e] > 0) return e;
    return -1;
  }

  const Instance& inst_;
  const GridVector& p_;
  const SupportNetwork& sn_;
  std::vector<Int> rem_;
  std::vector<std::vector<int>> equal_at_;
};

}  // namespace

Multiflow SupportToMultiflow(const Instance& inst, const GridVector& p,
                             const SupportNetwork& sn, const Support& sup) {
  Walker walker(inst, p, sn, sup);
  std::vector<FlowPath> walks;
  for (int s = 0; s < inst.k(); ++s)
    while (walker.Remaining(sn.members[s][0]) > 0) walks.push_back(walker.Walk(s));
  Multiflow f = Canonicalize(std::move(walks));
  const Support back = SupportOfMultiflow(inst, sn, f);
  MNMF_CHECK(back.psi2 == sup.psi2, "decomposition does not reproduce the support");
  return f;
}

Support SupportOfMultiflow(const Instance& inst, const SupportNetwork& sn,
                           const Multiflow& f) {
  Support s{std::vector<Int>(sn.net.edges.size(), 0)};
  std::vector<Int> ends(inst.n(), 0);
  for (const FlowPath& path : f.paths) {
    for (size_t t = 1; t < path.vertices.size(); ++t) {
      const int e = inst.edge_between(path.vertices[t - 1], path.vertices[t]);
      MNMF_CHECK(e >= 0 && sn.equal_edge[e] >= 0, "path uses a non-tight edge");
      s.psi2[sn.equal_edge[e]] += path.lambda2;
    }
    for (size_t t = 1; t + 1 < path.vertices.size(); ++t) {
      const int me = sn.minus_edge[path.vertices[t]];
      if (me >= 0) s.psi2[me] += path.lambda2;
    }
    ends[path.vertices.front()] += path.lambda2;
    ends[path.vertices.back()] += path.lambda2;
  }
  for (int t = 0; t < inst.k(); ++t) {
    MNMF_CHECK(ends[t] % 2 == 0, "odd flow at a terminal");
    s.psi2[sn.self_edge[t]] = ends[t] / 2;
  }
  return s;
}

bool IsGeodesic(const GridVector& p, const FlowPath& path) {
  Int len = 0;
  for (size_t t = 1; t < path.vertices.size(); ++t)
    len += StarDist2(p[path.vertices[t - 1]].x, p[path.vertices[t]].x);
  return len == StarDist2(p[path.vertices.front()].x, p[path.vertices.back()].x);
}

}  // namespace mnmf
