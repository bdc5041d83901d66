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

// Exact primal/dual verification in doubled integers.

#ifndef MNMF_CERTIFY_H_
#define MNMF_CERTIFY_H_

#include <string>
#include <vector>

#include "mnmf/decompose.h"
#include "mnmf/model.h"

namespace mnmf {

struct Certificate {
  Int value2 = 0;
  Int cost2_original = 0;
  Int cost2_perturbed = 0;
  Int dual2h = 0;
  Int gap = 0;
  std::vector<std::string> violations;

  bool ok() const { return gap == 0 && violations.empty(); }
};

// Path validity (S-path, simple, existing edges, positive lambda2) and
// node capacities.
std::vector<std::string> CheckMultiflow(const Instance& inst,
                                        const Multiflow& f);

// Tightness of used edges, saturation at positive heights, geodesic paths.
std::vector<std::string> CheckSlackness(const Instance& inst,
                                        const std::vector<Int>& costs,
                                        const GridVector& p,
                                        const Multiflow& f);

// 2h(p) - (2M val(f) - 2d(f)).
Int DualityGap(const Instance& inst, const std::vector<Int>& costs, Int M,
               const GridVector& p, const Multiflow& f);

// Full certificate against the prepared instance (d', M).  With
// full = false only the objective values are computed.
Certificate Certify(const PreparedInstance& prep, const GridVector& p,
                    const Multiflow& f, bool full = true);

}  // namespace mnmf

#endif  // MNMF_CERTIFY_H_
