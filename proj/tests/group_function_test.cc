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


#include <vector>

#include "doctest.h"
#include "mnmf/group_function.h"

namespace mnmf {
namespace {

Mask Bits(std::initializer_list<int> idx) {
  Mask m = 0;
  for (int i : idx) m |= Mask{1} << i;
  return m;
}

TEST_CASE("node-flowing values") {
  const auto g = SignedGroupFunction::NodeFlowing(4, 3);
  CHECK(g.Eval(0) == 0);
  CHECK(g.Eval(Bits({0, 4, 5})) == 3);         // |X+| = 1, |X-| = 2
  CHECK(g.Eval(Bits({0, 5, 6, 7})) == 0);      // 11*
  CHECK(g.Eval(Bits({0, 4, 5, 6})) == 3);      // 11, not 11*
  CHECK(g.Eval(Bits({0, 1})) == 6);            // 22
  CHECK(g.Eval(Bits({0, 1, 4, 5, 6})) == 3);   // 21
  CHECK(g.Eval(g.full_mask()) == 0);
}

TEST_CASE("tight values") {
  const auto g = SignedGroupFunction::Tight(3, 2);
  CHECK(g.Eval(Bits({3, 4, 5})) == -4);
  CHECK(g.Eval(Bits({0, 3, 4, 5})) == -2);
  CHECK(g.Eval(Bits({0, 1})) == 4);
  CHECK(g.Eval(g.full_mask()) == 0);
}

TEST_CASE("zero-forcing values") {
  const auto g = SignedGroupFunction::ZeroForcing();
  CHECK(g.size() == 1);
  for (Mask m = 0; m <= g.full_mask(); ++m) CHECK(g.Eval(m) == 0);
}

TEST_CASE("beta") {
  const auto nf = SignedGroupFunction::NodeFlowing(3, 2);
  const auto ti = SignedGroupFunction::Tight(3, 2);
  CHECK(nf.Beta(0b011, 0) == 4);
  CHECK(nf.Beta(0, 0) == 0);
  CHECK(ti.Beta(0, 0b111) == -4);
  CHECK(ti.Beta(0, 0b011) == -2);
  CHECK(nf.Beta(0b001, 0b110) == 0);
  CHECK(nf.Beta(0b001, 0b010) == 2);
}

TEST_CASE("exchange capacity examples") {
  const auto nf = SignedGroupFunction::NodeFlowing(3, 1);
  const std::vector<Int> zero(6, 0);
  CHECK(nf.ExchangeCapacity(zero, nf.plus(0), nf.minus(0)) == 0);
  CHECK(BruteExchangeCapacity(nf, zero, 0, 3) == 0);

  const auto zf = SignedGroupFunction::ZeroForcing();
  const std::vector<Int> z2 = {0, 0};
  CHECK(zf.ExchangeCapacity(z2, 0, 1) == 0);

  // Lift of z = (2, 1, 1) in the tight polytope for c = 2.
  const auto ti = SignedGroupFunction::Tight(3, 2);
  const std::vector<Int> x = {2, 1, 1, -2, -1, -1};
  REQUIRE(BruteInBase(ti, x));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      if (i != j) CHECK(ti.ExchangeCapacity(x, i, j) == BruteExchangeCapacity(ti, x, i, j));
}

TEST_CASE("greedy vertices are bases") {
  for (int k = 1; k <= 4; ++k)
    for (Int c = 0; c <= 2; ++c) {
      CHECK(BruteInBase(SignedGroupFunction::NodeFlowing(k, c),
                        SignedGroupFunction::NodeFlowing(k, c).GreedyBase()));
      if (k >= 2)
        CHECK(BruteInBase(SignedGroupFunction::Tight(k, c),
                          SignedGroupFunction::Tight(k, c).GreedyBase()));
    }
}

// The lift of z lies in the base polyhedron exactly when z lies in the
// node-flowing polytope: z >= 0, z(S) <= 2c, z(i) <= z(S - i).
TEST_CASE("lift of the node-flowing polytope") {
  for (int k = 3; k <= 4; ++k)
    for (Int c = 1; c <= 2; ++c) {
      const auto nf = SignedGroupFunction::NodeFlowing(k, c);
      const auto ti = SignedGroupFunction::Tight(k, c);
      std::vector<Int> z(k, 0);
      for (;;) {
        Int total = 0;
        for (Int v : z) total += v;
        bool in_pc = total <= 2 * c;
        for (Int v : z) in_pc = in_pc && v <= total - v;
        std::vector<Int> x(2 * k);
        for (int i = 0; i < k; ++i) {
          x[i] = z[i];
          x[k + i] = -z[i];
        }
        CHECK(BruteInBase(nf, x) == in_pc);
        CHECK(BruteInBase(ti, x) == (in_pc && total == 2 * c));
        int i = 0;
        while (i < k && z[i] == 2 * c) z[i++] = 0;
        if (i == k) break;
        ++z[i];
      }
    }
}

TEST_CASE("tight groups need two members") {
  CHECK_THROWS_AS(SignedGroupFunction::Tight(1, 1), InvariantError);
}

TEST_CASE("debug names") {
  CHECK(SignedGroupFunction::Tight(3, 1).DebugString() == "tight(k=3,c=1)");
  CHECK(std::string(GroupKindName(GroupKind::kNodeFlowing)) == "node-flowing");
}

}  // namespace
}  // namespace mnmf
