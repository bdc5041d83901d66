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

#include "mnmf/model.h"

#include <algorithm>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>
#include <utility>

namespace mnmf {
namespace {

[[noreturn]] void Fail(int line, const std::string& msg) {
  throw ParseError("line " + std::to_string(line) + ": " + msg);
}

Int ParseInt(const std::string& tok, int line) {
  size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(tok, &used);
  } catch (const std::exception&) {
    Fail(line, "expected an integer, got '" + tok + "'");
  }
  if (used != tok.size()) Fail(line, "expected an integer, got '" + tok + "'");
  return v;
}

}  // namespace

Instance::Instance(int n, int k, std::vector<Edge> edges,
                   std::vector<Int> capacity)
    : n_(n), k_(k), edges_(std::move(edges)), capacity_(std::move(capacity)) {
  if (k_ < 3) throw ParseError("at least three terminals are required");
  if (n_ < k_) throw ParseError("fewer nodes than terminals");
  if (static_cast<int>(capacity_.size()) != n_)
    throw ParseError("capacity vector has the wrong length");
  for (int i = 0; i < n_; ++i) {
    if (capacity_[i] < 0) throw ParseError("negative capacity");
    if (is_terminal(i) && capacity_[i] != 0)
      throw ParseError("terminals carry no capacity");
  }
  incident_.assign(n_, {});
  std::set<std::pair<int, int>> seen;
  for (int e = 0; e < m(); ++e) {
    const Edge& ed = edges_[e];
    if (ed.u < 0 || ed.u >= n_ || ed.v < 0 || ed.v >= n_)
      throw ParseError("edge endpoint out of range");
    if (ed.u == ed.v) throw ParseError("self-loop");
    if (ed.cost < 0) throw ParseError("negative cost");
    if (is_terminal(ed.u) && is_terminal(ed.v))
      throw ParseError("edge joins two terminals");
    if (!seen.insert(std::minmax(ed.u, ed.v)).second)
      throw ParseError("duplicate edge");
    incident_[ed.u].push_back(e);
    incident_[ed.v].push_back(e);
  }
}

int Instance::edge_between(int u, int v) const {
  for (int e : incident_[u]) {
    const Edge& ed = edges_[e];
    if ((ed.u == u && ed.v == v) || (ed.u == v && ed.v == u)) return e;
  }
  return -1;
}

Int Instance::max_capacity() const {
  Int best = 0;
  for (Int c : capacity_) best = std::max(best, c);
  return best;
}

Int Instance::total_capacity() const {
  Int sum = 0;
  for (Int c : capacity_) sum += c;
  return sum;
}

Instance ParseInstance(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  bool have_header = false;
  int n = 0, m = 0, k = 0;
  std::vector<Int> cap;
  std::vector<bool> cap_set;
  std::vector<Edge> edges;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream ls(raw);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (!have_header) {
      if (tok[0] != "mnmf" || tok.size() != 4) Fail(line, "expected 'mnmf n m k'");
      n = static_cast<int>(ParseInt(tok[1], line));
      m = static_cast<int>(ParseInt(tok[2], line));
      k = static_cast<int>(ParseInt(tok[3], line));
      if (n < 1 || m < 0 || k < 0) Fail(line, "bad header values");
      if (k < 3) Fail(line, "at least three terminals are required");
      if (k > n) Fail(line, "more terminals than nodes");
      cap.assign(n, 0);
      cap_set.assign(n, false);
      have_header = true;
      continue;
    }
    if (tok[0] == "node") {
      if (tok.size() != 3) Fail(line, "expected 'node i c'");
      const Int i = ParseInt(tok[1], line);
      const Int c = ParseInt(tok[2], line);
      if (i < 1 || i > n) Fail(line, "node id out of range");
      if (i <= k) Fail(line, "capacity given for a terminal");
      if (c < 0) Fail(line, "negative capacity");
      if (cap_set[i - 1]) Fail(line, "capacity given twice");
      cap[i - 1] = c;
      cap_set[i - 1] = true;
    } else if (tok[0] == "edge") {
      if (tok.size() != 4) Fail(line, "expected 'edge u v d'");
      const Int u = ParseInt(tok[1], line);
      const Int v = ParseInt(tok[2], line);
      const Int d = ParseInt(tok[3], line);
      if (u < 1 || u > n || v < 1 || v > n) Fail(line, "edge endpoint out of range");
      if (d < 0) Fail(line, "negative cost");
      edges.push_back({static_cast<int>(u - 1), static_cast<int>(v - 1), d});
    } else {
      Fail(line, "unknown record '" + tok[0] + "'");
    }
  }
  if (!have_header) throw ParseError("missing 'mnmf' header");
  if (static_cast<int>(edges.size()) != m)
    throw ParseError("header announces " + std::to_string(m) + " edges, found " +
                     std::to_string(edges.size()));
  for (int i = k; i < n; ++i)
    if (!cap_set[i])
      throw ParseError("missing capacity for node " + std::to_string(i + 1));
  return Instance(n, k, std::move(edges), std::move(cap));
}

Instance ReadInstanceFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return ParseInstance(buf.str());
}

std::string FormatInstance(const Instance& inst) {
  std::ostringstream out;
  out << "mnmf " << inst.n() << " " << inst.m() << " " << inst.k() << "\n";
  for (int i = inst.k(); i < inst.n(); ++i)
    out << "node " << i + 1 << " " << inst.capacity(i) << "\n";
  for (const Edge& e : inst.edges())
    out << "edge " << e.u + 1 << " " << e.v + 1 << " " << e.cost << "\n";
  return out.str();
}

std::vector<Int> PerturbCosts(const Instance& inst) {
  Int zeros = 0;
  for (const Edge& e : inst.edges()) zeros += e.cost == 0;
  const Int factor = 2 * inst.max_capacity() * zeros + 1;
  std::vector<Int> out;
  out.reserve(inst.m());
  for (const Edge& e : inst.edges()) out.push_back(e.cost == 0 ? 1 : factor * e.cost);
  return out;
}

Int PowerOfTwoAbove(Int bound) {
  Int M = 1;
  while (M <= bound) {
    if (M > std::numeric_limits<Int>::max() / 4) throw GuardError("M overflows");
    M *= 2;
  }
  return M;
}

ScaleChoice ChooseM(const Instance& inst, const std::vector<Int>& costs) {
  Int dmax = 0;
  for (Int d : costs) dmax = std::max(dmax, d);
  ScaleChoice out;
  out.M = PowerOfTwoAbove(2 * inst.max_capacity() * dmax);
  while ((Int{1} << out.mu) < out.M) ++out.mu;
  return out;
}

Int ObjectiveM(const Instance& inst, const std::vector<Int>& costs) {
  Int dmax = 0;
  for (Int d : costs) dmax = std::max(dmax, d);
  return std::max(ChooseM(inst, costs).M,
                  PowerOfTwoAbove(4 * dmax * inst.total_capacity()));
}

PreparedInstance::PreparedInstance(Instance inst) : base(std::move(inst)) {
  costs = PerturbCosts(base);
  for (const Edge& e : base.edges()) zero_edges += e.cost == 0;
  M = ObjectiveM(base, costs);
  mu = ChooseM(base, costs).mu;
}

GridPoint TerminalPoint(int terminal, Int M) {
  return GridPoint::Make(Instance::BranchOf(terminal), 2 * M, 0);
}

GridVector InitialPotential(const Instance& inst, Int M, bool phase_start) {
  GridVector p(inst.n());
  for (int i = 0; i < inst.n(); ++i) {
    if (inst.is_terminal(i))
      p[i] = TerminalPoint(i, M);
    else
      p[i] = GridPoint::Make(0, 0, phase_start ? 0 : 2 * M);
  }
  return p;
}

bool IsPotential(const Instance& inst, const std::vector<Int>& costs, Int M,
                 const GridVector& p, bool check_range) {
  if (static_cast<int>(p.size()) != inst.n()) return false;
  for (int i = 0; i < inst.n(); ++i) {
    if (!InGrid(p[i]) || p[i].y2 < 0) return false;
    if (inst.is_terminal(i) && p[i] != TerminalPoint(i, M)) return false;
    if (check_range && p[i].x.radius2 > 2 * M) return false;
  }
  for (int e = 0; e < inst.m(); ++e) {
    const Edge& ed = inst.edges()[e];
    if (Pi2(p[ed.u], p[ed.v]) > 4 * costs[e]) return false;
  }
  return true;
}

Int Dual2h(const Instance& inst, const GridVector& p) {
  Int sum = 0;
  for (int i = inst.k(); i < inst.n(); ++i) sum += inst.capacity(i) * p[i].y2;
  return sum;
}

std::optional<Int> HEval2(const Instance& inst, const std::vector<Int>& costs,
                          Int M, const GridVector& p) {
  if (!IsPotential(inst, costs, M, p)) return std::nullopt;
  return Dual2h(inst, p);
}

GridVector NormalizePotential(const Instance& inst,
                              const std::vector<Int>& costs, Int M,
                              const GridVector& p) {
  if (!IsPotential(inst, costs, M, p, /*check_range=*/false))
    throw std::invalid_argument("normalize_potential: not a potential");
  GridVector q = p;
  for (int i = inst.k(); i < inst.n(); ++i) {
    StarPoint& x = q[i].x;
    if (x.radius2 > 2 * M) x.radius2 = q[i].integral() ? 2 * M : 2 * M - 1;
  }
  for (int i = inst.k(); i < inst.n(); ++i) {
    if (inst.capacity(i) != 0 || q[i].y2 <= 4 * M) continue;
    GridVector trial = q;
    trial[i].y2 = 4 * M - (q[i].integral() ? 0 : 1);
    if (IsPotential(inst, costs, M, trial)) q = std::move(trial);
  }
  MNMF_CHECK(IsPotential(inst, costs, M, q), "normalization broke (4c)");
  MNMF_CHECK(Dual2h(inst, q) == Dual2h(inst, p), "normalization changed h");
  return q;
}

}  // namespace mnmf
