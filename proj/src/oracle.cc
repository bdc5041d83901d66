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

#include "mnmf/oracle.h"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <functional>
#include <limits>

namespace mnmf {

namespace {

using Q = boost::multiprecision::cpp_rational;

// Dense tableau for max obj.x subject to A x <= b, x >= 0 with b >= 0;
// slack columns follow the structural ones.  Bland's rule throughout.
class Simplex {
 public:
  Simplex(const std::vector<std::vector<Int>>& a, const std::vector<Int>& b)
      : rows_(static_cast<int>(a.size())),
        cols_(rows_ == 0 ? 0 : static_cast<int>(a[0].size()) + rows_),
        structural_(rows_ == 0 ? 0 : static_cast<int>(a[0].size())) {
    t_.assign(rows_, std::vector<Q>(cols_, Q(0)));
    rhs_.resize(rows_);
    basis_.resize(rows_);
    for (int r = 0; r < rows_; ++r) {
      MNMF_CHECK(b[r] >= 0, "negative right-hand side");
      for (int c = 0; c < structural_; ++c) t_[r][c] = Q(a[r][c]);
      t_[r][structural_ + r] = Q(1);
      rhs_[r] = Q(b[r]);
      basis_[r] = structural_ + r;
    }
  }

  int cols() const { return cols_; }

  std::vector<Q> Reduced(const std::vector<Q>& obj) const {
    std::vector<Q> red(obj);
    for (int r = 0; r < rows_; ++r) {
      const Q& cb = obj[basis_[r]];
      if (cb == 0) continue;
      for (int c = 0; c < cols_; ++c) red[c] -= cb * t_[r][c];
    }
    return red;
  }

  // Returns the reduced costs at optimality.
  std::vector<Q> Optimize(const std::vector<Q>& obj,
                          const std::vector<char>& allowed) {
    for (;;) {
      const std::vector<Q> red = Reduced(obj);
      int enter = -1;
      for (int c = 0; c < cols_ && enter < 0; ++c)
        if (allowed[c] && red[c] > 0) enter = c;
      if (enter < 0) return red;
      int leave = -1;
      Q best;
      for (int r = 0; r < rows_; ++r) {
        if (t_[r][enter] <= 0) continue;
        const Q ratio = rhs_[r] / t_[r][enter];
        if (leave < 0 || ratio < best ||
            (ratio == best && basis_[r] < basis_[leave])) {
          leave = r;
          best = ratio;
        }
      }
      MNMF_CHECK(leave >= 0, "unbounded path LP");
      Pivot(leave, enter);
    }
  }

  Q Value(const std::vector<Q>& obj) const {
    Q v = 0;
    for (int r = 0; r < rows_; ++r) v += obj[basis_[r]] * rhs_[r];
    return v;
  }

 private:
  void Pivot(int pr, int pc) {
    const Q piv = t_[pr][pc];
    for (Q& v : t_[pr]) v /= piv;
    rhs_[pr] /= piv;
    for (int r = 0; r < rows_; ++r) {
      if (r == pr || t_[r][pc] == 0) continue;
      const Q f = t_[r][pc];
      for (int c = 0; c < cols_; ++c) t_[r][c] -= f * t_[pr][c];
      rhs_[r] -= f * rhs_[pr];
    }
    basis_[pr] = pc;
  }

  int rows_, cols_, structural_;
  std::vector<std::vector<Q>> t_;
  std::vector<Q> rhs_;
  std::vector<int> basis_;
};

Int Doubled(const Q& v, const char* what) {
  const Q d = v * 2;
  MNMF_CHECK(boost::multiprecision::denominator(d) == 1,
             std::string(what) + " is not half-integral");
  return static_cast<Int>(boost::multiprecision::numerator(d));
}

struct PathData {
  std::vector<std::vector<int>> paths;
  std::vector<Int> cost;                  // original cost per path
  std::vector<std::vector<Int>> a;        // nonterminal x path incidence
  std::vector<Int> b;                     // capacities
};

PathData BuildPaths(const Instance& inst) {
  PathData d;
  d.paths = EnumerateSPaths(inst);
  const int rows = inst.n() - inst.k();
  d.a.assign(rows, std::vector<Int>(d.paths.size(), 0));
  for (int i = inst.k(); i < inst.n(); ++i) d.b.push_back(inst.capacity(i));
  for (size_t p = 0; p < d.paths.size(); ++p) {
    const std::vector<int>& v = d.paths[p];
    Int c = 0;
    for (size_t t = 1; t < v.size(); ++t)
      c += inst.edges()[inst.edge_between(v[t - 1], v[t])].cost;
    d.cost.push_back(c);
    for (size_t t = 1; t + 1 < v.size(); ++t) d.a[v[t] - inst.k()][p] = 1;
  }
  return d;
}

void CheckSize(const Instance& inst) {
  if (inst.n() > kOracleMaxNodes)
    throw GuardError("oracle limited to " + std::to_string(kOracleMaxNodes) +
                     " nodes");
}

}  // namespace

std::vector<std::vector<int>> EnumerateSPaths(const Instance& inst) {
  CheckSize(inst);
  std::vector<std::vector<int>> adj(inst.n());
  for (const Edge& e : inst.edges()) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  std::vector<std::vector<int>> out;
  std::vector<int> stack;
  std::vector<char> on(inst.n(), 0);
  std::function<void(int)> dfs = [&](int u) {
    for (int w : adj[u]) {
      if (on[w]) continue;
      if (inst.is_terminal(w)) {
        if (w > stack.front()) {
          stack.push_back(w);
          out.push_back(stack);
          stack.pop_back();
          if (static_cast<int>(out.size()) > kOracleMaxPaths)
            throw GuardError("too many S-paths for the oracle");
        }
        continue;
      }
      on[w] = 1;
      stack.push_back(w);
      dfs(w);
      stack.pop_back();
      on[w] = 0;
    }
  };
  for (int s = 0; s < inst.k(); ++s) {
    stack = {s};
    on[s] = 1;
    dfs(s);
    on[s] = 0;
  }
  std::sort(out.begin(), out.end());
  return out;
}

Int OracleM(const Instance& inst) {
  Int dmax = 1;
  for (const Edge& e : inst.edges()) dmax = std::max(dmax, e.cost);
  return PowerOfTwoAbove(4 * dmax * inst.total_capacity());
}

OracleResult BruteSolve(const Instance& inst, Int M) {
  const PathData d = BuildPaths(inst);
  OracleResult out;
  if (d.paths.empty()) return out;
  const int np = static_cast<int>(d.paths.size());

  Simplex lex(d.a, d.b);
  const int cols = lex.cols();
  std::vector<Q> value_obj(cols, Q(0)), cost_obj(cols, Q(0));
  for (int p = 0; p < np; ++p) {
    value_obj[p] = 1;
    cost_obj[p] = -Q(d.cost[p]);
  }
  const std::vector<Q> red = lex.Optimize(value_obj, std::vector<char>(cols, 1));
  // Stay on the optimal face of the value objective.
  std::vector<char> face(cols, 0);
  for (int c = 0; c < cols; ++c) face[c] = red[c] == 0;
  lex.Optimize(cost_obj, face);
  out.value2 = Doubled(lex.Value(value_obj), "maximum flow value");
  out.cost2 = Doubled(-lex.Value(cost_obj), "minimum cost");

  Simplex weighted(d.a, d.b);
  std::vector<Q> w_obj(cols, Q(0));
  for (int p = 0; p < np; ++p) w_obj[p] = Q(M) - Q(d.cost[p]);
  weighted.Optimize(w_obj, std::vector<char>(cols, 1));
  out.objective2 = Doubled(weighted.Value(w_obj), "weighted objective");

  if (M >= OracleM(inst))
    MNMF_CHECK(out.objective2 == M * out.value2 - out.cost2,
               "weighted optimum does not rank value before cost");
  return out;
}

OracleResult LatticeSolve(const Instance& inst, Int M) {
  const PathData d = BuildPaths(inst);
  const int np = static_cast<int>(d.paths.size());
  std::vector<Int> bound(np, 0);
  double points = 1;
  for (int p = 0; p < np; ++p) {
    Int b = std::numeric_limits<Int>::max();
    for (int r = 0; r < static_cast<int>(d.b.size()); ++r)
      if (d.a[r][p]) b = std::min(b, 2 * d.b[r]);
    bound[p] = b;
    points *= static_cast<double>(b + 1);
    if (points > static_cast<double>(kLatticeBudget))
      throw GuardError("half-integral lattice too large for enumeration");
  }
  std::vector<Int> rem(d.b.size());
  for (size_t r = 0; r < d.b.size(); ++r) rem[r] = 2 * d.b[r];

  bool have = false;
  OracleResult best;
  Int value2 = 0, cost2 = 0;
  std::function<void(int)> rec = [&](int p) {
    if (p == np) {
      const Int obj = M * value2 - cost2;
      if (!have || obj > best.objective2) best.objective2 = obj;
      if (!have || value2 > best.value2 ||
          (value2 == best.value2 && cost2 < best.cost2)) {
        best.value2 = value2;
        best.cost2 = cost2;
      }
      have = true;
      return;
    }
    Int cap = bound[p];
    for (size_t r = 0; r < rem.size(); ++r)
      if (d.a[r][p]) cap = std::min(cap, rem[r]);
    for (Int l2 = 0; l2 <= cap; ++l2) {
      for (size_t r = 0; r < rem.size(); ++r)
        if (d.a[r][p]) rem[r] -= l2;
      value2 += l2;
      cost2 += l2 * d.cost[p];
      rec(p + 1);
      value2 -= l2;
      cost2 -= l2 * d.cost[p];
      for (size_t r = 0; r < rem.size(); ++r)
        if (d.a[r][p]) rem[r] += l2;
    }
  };
  rec(0);
  return best;
}

}  // namespace mnmf
