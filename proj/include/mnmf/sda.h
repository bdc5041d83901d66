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

// Steepest descent on the dual objective and the cost-scaling driver.

#ifndef MNMF_SDA_H_
#define MNMF_SDA_H_

#include <functional>
#include <optional>
#include <vector>

#include "mnmf/dualnet.h"
#include "mnmf/model.h"

namespace mnmf {

// Called before each descent step is applied.
using DescentObserver =
    std::function<void(const Instance& inst, const std::vector<Int>& costs,
                       Int M, const GridVector& p, const Descent& step)>;

struct SdaOptions {
  // Hard cap on descent steps; exceeding it is an invariant violation.
  // Unset means unbounded.
  std::optional<int> max_descents;
  DescentObserver observer;
};

struct SdaResult {
  GridVector p;
  Optimal optimum;
  int descents = 0;
  int oracle_calls = 0;
  std::vector<Int> h2_trace;  // 2h of every visited potential
};

SdaResult SdaMinimize(const Instance& inst, const std::vector<Int>& costs,
                      Int M, const GridVector& p0,
                      const SdaOptions& options = {});

GridVector DoublePotential(const GridVector& p);

struct Repaired {
  GridVector p;
  bool applied = false;
};
Repaired RepairPotential(const Instance& inst, const std::vector<Int>& costs,
                         Int M, const GridVector& q);

// ceil(d / 2^t) per edge.
std::vector<Int> ScaledCosts(const std::vector<Int>& costs, int t);

struct PhaseStats {
  int t = 0;
  Int M = 1;
  int descents = 0;
  int oracle_calls = 0;
  bool repaired = false;
  std::vector<Int> h2_trace;
};

struct ScalingResult {
  GridVector p;      // optimal for (d', M)
  Optimal optimum;   // network and support at p
  // In execution order, t = mu first.  The first phase runs at
  // M / 2^mu, which exceeds 1 when the objective weight is above the
  // scaling choice.
  std::vector<PhaseStats> phases;
};

ScalingResult ScalingSolve(const PreparedInstance& prep,
                           const DescentObserver& observer = {});

// Descent steps allowed per phase: 2m + 6.
int PhaseDescentCap(const Instance& inst);

}  // namespace mnmf

#endif  // MNMF_SDA_H_
