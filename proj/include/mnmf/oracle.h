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

// Independent reference solver for tiny instances.  Shares nothing with the
// dual machinery: it works on the path formulation directly.

#ifndef MNMF_ORACLE_H_
#define MNMF_ORACLE_H_

#include <vector>

#include "mnmf/model.h"

namespace mnmf {

inline constexpr int kOracleMaxNodes = 12;
inline constexpr int kOracleMaxPaths = 5000;
inline constexpr Int kLatticeBudget = 10'000'000;

// Simple paths between distinct terminals whose interior avoids
// terminals, smaller endpoint first, in lexicographic order.  Throws
// GuardError above kOracleMaxNodes nodes or kOracleMaxPaths paths.
std::vector<std::vector<int>> EnumerateSPaths(const Instance& inst);

struct OracleResult {
  Int value2 = 0;      // maximum flow value, doubled
  Int cost2 = 0;       // minimum cost among maximum-value flows, doubled
  Int objective2 = 0;  // max of 2M val - 2 d(f) for the requested M
};

// Exact rational LP over path variables: lexicographic (max value, min
// cost) plus the M-weighted objective.  Asserts half-integrality of the
// optimal values.
OracleResult BruteSolve(const Instance& inst, Int M);

// Exhaustive enumeration of half-integral path flows.  Throws GuardError
// when the lattice exceeds kLatticeBudget points.
OracleResult LatticeSolve(const Instance& inst, Int M);

// An M for which the weighted objective ranks value before cost.
Int OracleM(const Instance& inst);

}  // namespace mnmf

#endif  // MNMF_ORACLE_H_
