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

// Text and JSON reports.  Vertex ids are 1-based as in instance files.
//
//   value <value2>/2
//   cost <cost2_original>/2
//   h <dual2h>/2
//   gap <gap>
//   path <lambda2> <v0> <v1> ... <vL>
//   dual <i> <branch|0> <radius2> <y2>
//   trace <t> <2h> <2h> ...            (only with tracing)

#ifndef MNMF_REPORT_H_
#define MNMF_REPORT_H_

#include <string>
#include <string_view>
#include <vector>

#include "mnmf/solver.h"

namespace mnmf {

std::string FormatText(const SolveResult& r, bool trace);
std::string FormatJson(const SolveResult& r, bool trace);

struct StoredSolution {
  Int value2 = 0;
  Int cost2 = 0;
  Int dual2h = 0;
  Int gap = 0;
  Multiflow flow;
  GridVector potential;
};

// Throws ParseError on malformed input.
StoredSolution ParseSolution(const Instance& inst, std::string_view text);

// Re-certifies a stored solution and compares its reported figures.
std::vector<std::string> CheckSolution(const Instance& inst,
                                       const StoredSolution& sol);

}  // namespace mnmf

#endif  // MNMF_REPORT_H_
