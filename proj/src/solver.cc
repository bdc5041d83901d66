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

#include "mnmf/solver.h"

namespace mnmf {

SolveResult Solve(const PreparedInstance& prep, const SolveOptions& options) {
  ScalingResult sr = ScalingSolve(prep, options.observer);
  SolveResult out;
  out.M = prep.M;
  out.mu = prep.mu;
  out.flow = SupportToMultiflow(prep.base, sr.p, sr.optimum.network,
                                sr.optimum.support);
  out.potential = std::move(sr.p);
  out.phases = std::move(sr.phases);
  out.certified = options.certify;
  out.certificate = Certify(prep, out.potential, out.flow, options.certify);
  return out;
}

SolveResult Solve(const Instance& inst, const SolveOptions& options) {
  return Solve(PreparedInstance(inst), options);
}

}  // namespace mnmf
