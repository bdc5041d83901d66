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

// End-to-end pipeline: perturb, scale, descend, decompose, certify.

#ifndef MNMF_SOLVER_H_
#define MNMF_SOLVER_H_

#include <vector>

#include "mnmf/certify.h"
#include "mnmf/decompose.h"
#include "mnmf/model.h"
#include "mnmf/sda.h"

namespace mnmf {

struct SolveOptions {
  bool certify = true;
  DescentObserver observer;
};

struct SolveResult {
  Int M = 1;
  int mu = 0;
  GridVector potential;
  Multiflow flow;
  Certificate certificate;
  std::vector<PhaseStats> phases;
  bool certified = false;  // full checks ran
};

SolveResult Solve(const PreparedInstance& prep, const SolveOptions& options = {});
SolveResult Solve(const Instance& inst, const SolveOptions& options = {});

}  // namespace mnmf

#endif  // MNMF_SOLVER_H_
