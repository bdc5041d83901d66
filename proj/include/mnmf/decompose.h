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

#ifndef MNMF_DECOMPOSE_H_
#define MNMF_DECOMPOSE_H_

#include <vector>

#include "mnmf/dualnet.h"
#include "mnmf/model.h"

namespace mnmf {

struct FlowPath {
  std::vector<int> vertices;  // 0-based, smaller terminal first
  Int lambda2 = 0;            // twice the flow value

  friend bool operator==(const FlowPath&, const FlowPath&) = default;
};

struct Multiflow {
  std::vector<FlowPath> paths;  // sorted by vertex sequence

  Int value2() const;
};

// Sums lambda2 of identical paths, orients and sorts them.
Multiflow Canonicalize(std::vector<FlowPath> paths);

// Twice the cost of f under per-edge costs; throws if a path step is not an
// edge of the instance.
Int Cost2(const Instance& inst, const std::vector<Int>& costs,
          const Multiflow& f);

// Doubled flow through every vertex (interior use only).
std::vector<Int> NodeFlow2(const Instance& inst, const Multiflow& f);

// Decomposes a feasible support into unit walks of lambda2 = 1.
Multiflow SupportToMultiflow(const Instance& inst, const GridVector& p,
                             const SupportNetwork& sn, const Support& sup);

// The support induced by f; throws if f uses a non-tight edge.
Support SupportOfMultiflow(const Instance& inst, const SupportNetwork& sn,
                           const Multiflow& f);

// Sum of star distances along the path equals the endpoint distance.
bool IsGeodesic(const GridVector& p, const FlowPath& path);

}  // namespace mnmf

#endif  // MNMF_DECOMPOSE_H_
