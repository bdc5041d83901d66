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

#include "mnmf/certify.h"

#include <algorithm>

namespace mnmf {

namespace {

std::string PathName(size_t idx) { return "path " + std::to_string(idx + 1); }

std::string VertexName(int v) { return "node " + std::to_string(v + 1); }

}  // namespace

std::vector<std::string> CheckMultiflow(const Instance& inst,
                                        const Multiflow& f) {
  std::vector<std::string> out;
  for (size_t idx = 0; idx < f.paths.size(); ++idx) {
    const FlowPath& path = f.paths[idx];
    const std::vector<int>& v = path.vertices;
    if (path.lambda2 <= 0) out.push_back(PathName(idx) + ": nonpositive lambda");
    if (v.size() < 2) {
      out.push_back(PathName(idx) + ": too short");
      continue;
    }
    bool in_range = true;
    for (int u : v) in_range = in_range && u >= 0 && u < inst.n();
    if (!in_range) {
      out.push_back(PathName(idx) + ": vertex out of range");
      continue;
    }
    if (!inst.is_terminal(v.front()) || !inst.is_terminal(v.back()) ||
        v.front() == v.back())
      out.push_back(PathName(idx) + ": endpoints are not distinct terminals");
    std::vector<int> sorted = v;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      out.push_back(PathName(idx) + ": repeated vertex");
    for (size_t t = 1; t < v.size(); ++t)
      if (inst.edge_between(v[t - 1], v[t]) < 0)
        out.push_back(PathName(idx) + ": missing edge " +
                      std::to_string(v[t - 1] + 1) + "-" +
                      std::to_string(v[t] + 1));
  }
  if (!out.empty()) return out;
  const std::vector<Int> through = NodeFlow2(inst, f);
  for (int i = 0; i < inst.n(); ++i) {
    if (inst.is_terminal(i)) {
      if (through[i] != 0) out.push_back(VertexName(i) + ": terminal used as interior");
    } else if (through[i] > 2 * inst.capacity(i)) {
      out.push_back(VertexName(i) + ": capacity exceeded");
    }
  }
  return out;
}

std::vector<std::string> CheckSlackness(const Instance& inst,
                                        const std::vector<Int>& costs,
                                        const GridVector& p,
                                        const Multiflow& f) {
  std::vector<std::string> out;
  std::vector<char> used(inst.m(), 0);
  for (const FlowPath& path : f.paths)
    for (size_t t = 1; t < path.vertices.size(); ++t)
      used[inst.edge_between(path.vertices[t - 1], path.vertices[t])] = 1;
  for (int e = 0; e < inst.m(); ++e) {
    const Edge& ed = inst.edges()[e];
    if (used[e] && Pi2(p[ed.u], p[ed.v]) != 4 * costs[e])
      out.push_back("edge " + std::to_string(ed.u + 1) + "-" +
                    std::to_string(ed.v + 1) + ": used but not tight");
  }
  const std::vector<Int> through = NodeFlow2(inst, f);
  for (int i = inst.k(); i < inst.n(); ++i)
    if (p[i].y2 > 0 && through[i] != 2 * inst.capacity(i))
      out.push_back(VertexName(i) + ": positive height but not saturated");
  for (size_t idx = 0; idx < f.paths.size(); ++idx)
    if (!IsGeodesic(p, f.paths[idx]))
      out.push_back(PathName(idx) + ": not geodesic");
  return out;
}

Int DualityGap(const Instance& inst, const std::vector<Int>& costs, Int M,
               const GridVector& p, const Multiflow& f) {
  return Dual2h(inst, p) - (M * f.value2() - Cost2(inst, costs, f));
}

Certificate Certify(const PreparedInstance& prep, const GridVector& p,
                    const Multiflow& f, bool full) {
  const Instance& inst = prep.base;
  Certificate c;
  if (full) {
    c.violations = CheckMultiflow(inst, f);
    if (!IsPotential(inst, prep.costs, prep.M, p))
      c.violations.push_back("dual vector is not a potential");
    if (!c.violations.empty()) {
      c.gap = -1;
      return c;
    }
    for (std::string& v : CheckSlackness(inst, prep.costs, p, f))
      c.violations.push_back(std::move(v));
  }
  std::vector<Int> original;
  for (const Edge& e : inst.edges()) original.push_back(e.cost);
  c.value2 = f.value2();
  c.cost2_original = Cost2(inst, original, f);
  c.cost2_perturbed = Cost2(inst, prep.costs, f);
  c.dual2h = Dual2h(inst, p);
  c.gap = c.dual2h - (prep.M * c.value2 - c.cost2_perturbed);
  if (full && c.gap != 0)
    c.violations.push_back("duality gap " + std::to_string(c.gap));
  return c;
}

}  // namespace mnmf
