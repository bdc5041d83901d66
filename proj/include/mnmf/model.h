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

// Problem instances, cost preprocessing and dual potentials.
//
// Nodes are 0-based internally; terminals are 0..k-1 and terminal s owns
// branch s + 1 of the star.  The text format is 1-based.

#ifndef MNMF_MODEL_H_
#define MNMF_MODEL_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mnmf/extended.h"
#include "mnmf/grid.h"

namespace mnmf {

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A size or budget limit was exceeded; distinct from a bug.
class GuardError : public std::runtime_error {
 public:
  explicit GuardError(const std::string& what) : std::runtime_error(what) {}
};

struct Edge {
  int u = 0;
  int v = 0;
  Int cost = 0;
};

class Instance {
 public:
  // Validates and throws ParseError on any violated assumption.
  Instance(int n, int k, std::vector<Edge> edges, std::vector<Int> capacity);

  int n() const { return n_; }
  int k() const { return k_; }
  int m() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  // capacity(i) is 0 for terminals.
  Int capacity(int i) const { return capacity_[i]; }
  const std::vector<Int>& capacities() const { return capacity_; }
  bool is_terminal(int i) const { return i < k_; }
  // Edge ids incident to node i.
  const std::vector<int>& incident(int i) const { return incident_[i]; }
  // Edge id joining u and v, or -1.
  int edge_between(int u, int v) const;

  Int max_capacity() const;
  Int total_capacity() const;

  static int BranchOf(int terminal) { return terminal + 1; }

 private:
  int n_;
  int k_;
  std::vector<Edge> edges_;
  std::vector<Int> capacity_;
  std::vector<std::vector<int>> incident_;
};

// Parses the `mnmf n m k / node i c / edge u v d` text format.
Instance ParseInstance(std::string_view text);
Instance ReadInstanceFile(const std::string& path);
std::string FormatInstance(const Instance& inst);

// Costs made positive: 1 on zero edges, (2C|Z|+1) d(e) elsewhere.
std::vector<Int> PerturbCosts(const Instance& inst);

// Smallest power of two strictly greater than `bound` (1 when bound < 1).
Int PowerOfTwoAbove(Int bound);

// Scaling choice: M = 2^mu, the smallest power of two above
// 2 * C * max(d').  mu + 1 is the number of scaling phases.
struct ScaleChoice {
  Int M = 1;
  int mu = 0;
};
ScaleChoice ChooseM(const Instance& inst, const std::vector<Int>& costs);

// Objective weight.  A half-integral maximizer of M val(f) - d(f) is a
// min-cost maximum multiflow once M / 2 exceeds the cost of any multiflow,
// which is at most 2 * max(d) * sum(c): every edge carrying flow meets a
// nonterminal, and each unit through a node uses two of its edges.  Never
// below ChooseM's value.
Int ObjectiveM(const Instance& inst, const std::vector<Int>& costs);

struct PreparedInstance {
  explicit PreparedInstance(Instance inst);

  Instance base;
  std::vector<Int> costs;  // perturbed, all positive
  Int M = 1;               // ObjectiveM
  int mu = 0;              // from ChooseM; phases t = mu..0 use M / 2^t
  int zero_edges = 0;
};

// Terminal s pinned at ((M, s), 0).
GridPoint TerminalPoint(int terminal, Int M);

// Nonterminals at (0, M) and terminals pinned; a potential for any costs.
// With `phase_start`, nonterminals sit at (0, 0), which is optimal when
// M == 1 and every cost is at least 1.
GridVector InitialPotential(const Instance& inst, Int M, bool phase_start);

// Conditions of a potential.  `check_range` adds dist(0, x_i) <= M.
bool IsPotential(const Instance& inst, const std::vector<Int>& costs, Int M,
                 const GridVector& p, bool check_range = true);

// sum c_i y2_i, the doubled dual objective.  Ignores feasibility.
Int Dual2h(const Instance& inst, const GridVector& p);

// Dual2h if p is a potential, nullopt (infeasible) otherwise.
std::optional<Int> HEval2(const Instance& inst, const std::vector<Int>& costs,
                          Int M, const GridVector& p);

// Pulls every x_i back into the ball of radius M, and caps y at 2M for
// zero-capacity nodes when that keeps p a potential.  Keeps Dual2h.
// Throws std::invalid_argument when p is not a potential without range.
GridVector NormalizePotential(const Instance& inst,
                              const std::vector<Int>& costs, Int M,
                              const GridVector& p);

}  // namespace mnmf

#endif  // MNMF_MODEL_H_
