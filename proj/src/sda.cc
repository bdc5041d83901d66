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

#include "mnmf/sda.h"

#include <utility>

namespace mnmf {

SdaResult SdaMinimize(const Instance& inst, const std::vector<Int>& costs,
                      Int M, const GridVector& p0, const SdaOptions& options) {
  MNMF_CHECK(IsPotential(inst, costs, M, p0), "descent from a non-potential");
  GridVector p = p0;
  std::vector<Int> trace{Dual2h(inst, p)};
  int descents = 0;
  int calls = 0;
  for (;;) {
    ++calls;
    Direction dir = SteepestDirection(inst, costs, M, p);
    if (auto* opt = std::get_if<Optimal>(&dir))
      return SdaResult{std::move(p), std::move(*opt), descents, calls,
                       std::move(trace)};
    Descent& step = std::get<Descent>(dir);
    if (options.observer) options.observer(inst, costs, M, p, step);
    ++descents;
    if (options.max_descents && descents > *options.max_descents)
      throw InvariantError("descent budget exceeded");
    p = std::move(step.q);
    const Int h2 = Dual2h(inst, p);
    MNMF_CHECK(h2 < trace.back(), "dual objective did not decrease");
    trace.push_back(h2);
  }
}

GridVector DoublePotential(const GridVector& p) {
  GridVector q = p;
  for (GridPoint& u : q) {
    u.x = StarPoint::On(u.x.branch, 2 * u.x.radius2);
    u.y2 *= 2;
  }
  return q;
}

Repaired RepairPotential(const Instance& inst, const std::vector<Int>& costs,
                         Int M, const GridVector& q) {
  if (IsPotential(inst, costs, M, q)) return {q, false};
  Repaired r{q, true};
  for (int i = inst.k(); i < inst.n(); ++i) r.p[i].y2 += 4;
  MNMF_CHECK(IsPotential(inst, costs, M, r.p), "repair did not restore a potential");
  return r;
}

std::vector<Int> ScaledCosts(const std::vector<Int>& costs, int t) {
  std::vector<Int> out(costs.size());
  const Int div = Int{1} << t;
  for (size_t e = 0; e < costs.size(); ++e) out[e] = (costs[e] + div - 1) / div;
  return out;
}

int PhaseDescentCap(const Instance& inst) { return 2 * inst.m() + 6; }

ScalingResult ScalingSolve(const PreparedInstance& prep,
                           const DescentObserver& observer) {
  const Instance& inst = prep.base;
  SdaOptions opts;
  opts.max_descents = PhaseDescentCap(inst);
  opts.observer = observer;

  std::optional<ScalingResult> out;
  GridVector prev;
  std::vector<PhaseStats> phases;
  for (int t = prep.mu; t >= 0; --t) {
    const Int Mt = prep.M >> t;
    const std::vector<Int> dt = ScaledCosts(prep.costs, t);
    PhaseStats st;
    st.t = t;
    st.M = Mt;
    GridVector start;
    SdaOptions phase_opts = opts;
    if (t == prep.mu) {
      // At M_t = 1 the empty flow is optimal (every S-path costs at least
      // 2); otherwise the generic start is a potential for any costs and
      // the strictly decreasing 2h >= 0 bounds the phase.
      start = InitialPotential(inst, Mt, /*phase_start=*/Mt == 1);
      if (Mt > 1) phase_opts.max_descents.reset();
    } else {
      Repaired r = RepairPotential(inst, dt, Mt, DoublePotential(prev));
      start = std::move(r.p);
      st.repaired = r.applied;
    }
    SdaResult res = SdaMinimize(inst, dt, Mt, start, phase_opts);
    if (t == prep.mu && Mt == 1)
      MNMF_CHECK(res.descents == 0, "phase-start potential is not optimal");
    st.descents = res.descents;
    st.oracle_calls = res.oracle_calls;
    st.h2_trace = std::move(res.h2_trace);
    phases.push_back(std::move(st));
    prev = res.p;
    if (t == 0)
      out.emplace(ScalingResult{std::move(res.p), std::move(res.optimum), {}});
  }
  out->phases = std::move(phases);
  return std::move(*out);
}

}  // namespace mnmf
