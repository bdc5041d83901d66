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

// Submodular functions on the signed extension of a node group.
//
// A group with `size` members has 2 * size signed elements.  Local index
// j < size is the plus copy of member j, index size + j its minus copy.
// Subsets are bit masks over these local indices.

#ifndef MNMF_GROUP_FUNCTION_H_
#define MNMF_GROUP_FUNCTION_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mnmf/extended.h"

namespace mnmf {

using Mask = std::uint64_t;

enum class GroupKind {
  kNodeFlowing,  // rho_c: lift of the node-flowing polytope P_c
  kTight,        // rho-bar_c: lift of the tight polytope (z(S) = 2c)
  kZeroForcing,  // identically zero; forces a zero boundary
};

const char* GroupKindName(GroupKind kind);

class SignedGroupFunction {
 public:
  static constexpr int kMaxSize = 31;

  static SignedGroupFunction NodeFlowing(int k, Int c);
  static SignedGroupFunction Tight(int k, Int c);
  static SignedGroupFunction ZeroForcing();

  GroupKind kind() const { return kind_; }
  int size() const { return size_; }
  int signed_size() const { return 2 * size_; }
  Int capacity() const { return c_; }
  Mask full_mask() const;

  int plus(int member) const { return member; }
  int minus(int member) const { return size_ + member; }

  // rho(X).
  Int Eval(Mask x) const;

  // beta(Y, Z) = rho(Y+ u Z-) for disjoint member masks Y, Z.
  Int Beta(Mask y, Mask z) const;

  // min { rho(X) - x(X) : i in X, j not in X } for a base vector x.
  Int ExchangeCapacity(std::span<const Int> x, int i, int j) const;

  // Greedy vertex of the base polyhedron in local index order.
  std::vector<Int> GreedyBase() const;

  std::string DebugString() const;

 private:
  SignedGroupFunction(GroupKind kind, int size, Int c)
      : kind_(kind), size_(size), c_(c) {}

  // rho as a function of |X+|, |X-| and whether X is of type 11*.
  Int EvalCounts(int a, int b, bool star) const;

  GroupKind kind_;
  int size_;
  Int c_;
};

// Brute-force min over all X with i in X, j not in X.  Test oracle.
Int BruteExchangeCapacity(const SignedGroupFunction& g,
                          std::span<const Int> x, int i, int j);

// True iff x(X) <= rho(X) for all X and x(full) = rho(full).
bool BruteInBase(const SignedGroupFunction& g, std::span<const Int> x);

}  // namespace mnmf

#endif  // MNMF_GROUP_FUNCTION_H_
