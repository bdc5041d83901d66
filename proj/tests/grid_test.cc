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


#include <algorithm>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "mnmf/grid.h"

namespace mnmf {
namespace {

GridPoint P(int branch, Int r2, Int y2) { return GridPoint::Make(branch, r2, y2); }

std::vector<GridPoint> Window(int k, Int rmax, Int ymax) {
  std::vector<GridPoint> out;
  for (int b = 0; b <= k; ++b)
    for (Int r = (b == 0 ? 0 : 1); r <= (b == 0 ? 0 : rmax); ++r)
      for (Int y = -ymax; y <= ymax; ++y)
        if ((r - y) % 2 == 0) out.push_back(P(b, r, y));
  return out;
}

TEST_CASE("star distance") {
  CHECK(StarDist2({1, 6}, {1, 4}) == 2);
  CHECK(StarDist2({1, 6}, {2, 4}) == 10);
  CHECK(StarDist2(StarPoint::Origin(), {3, 7}) == 7);
  CHECK(StarPoint::On(2, 0) == StarPoint::Origin());
}

TEST_CASE("grid norm") {
  CHECK(GridNorm2(P(1, 2, 0), P(1, 4, 2)) == 4);
  CHECK(GridNorm2(P(2, 3, 1), P(2, 3, 1)) == 0);
  CHECK(GridNorm2(P(0, 0, 0), P(2, 2, 2)) == 4);
}

TEST_CASE("vector norm") {
  const GridVector p = {P(0, 0, 0), P(1, 2, 0)};
  CHECK(VecNorm2(p, p) == 0);
  CHECK(VecNorm2(std::vector{p[0]}, std::vector{P(1, 2, 0)}) ==
        GridNorm2(p[0], P(1, 2, 0)));
  const GridVector q = {P(1, 2, 0), P(1, 2, 4)};  // norms 2 and 4
  CHECK(VecNorm2(p, q) == 4);
  CHECK_THROWS_AS(VecNorm2(p, std::vector{p[0]}), std::invalid_argument);
}

TEST_CASE("grid membership") {
  CHECK(InGrid(P(1, 1, 1)));
  CHECK(InGrid(P(1, 2, -4)));
  CHECK_FALSE(InGrid(P(1, 1, 2)));
  CHECK_THROWS_AS(ParityOf(P(1, 1, 0)), std::invalid_argument);
}

TEST_CASE("parity classes") {
  CHECK(ParityOf(P(0, 0, 0)) == Parity::kEven);
  CHECK(ParityOf(P(1, 2, 0)) == Parity::kOdd);
  // A non-integral point takes the class of p + ((1/2)_0, 1/2).
  for (Int r = 0; r <= 2; ++r)
    for (Int y = 0; y <= 2; ++y) {
      if ((r - y) % 2 != 0) continue;
      const GridPoint p = P(1, r, y);
      if (p.integral()) {
        const Int diff = (r > y ? r - y : y - r) / 2;
        CHECK(ParityOf(p) == (diff % 2 == 0 ? Parity::kEven : Parity::kOdd));
      } else {
        const Parity shifted = ParityOf(P(1, r - 1, y + 1));
        CHECK(ParityOf(p) == (shifted == Parity::kEven ? Parity::kNonIntEven
                                                       : Parity::kNonIntOdd));
      }
    }
  CHECK(ParityOf(P(1, 1, 1)) == Parity::kNonIntOdd);
}

TEST_CASE("rounded midpoints") {
  auto m = RoundMid(P(0, 0, 0), P(1, 4, 0));
  CHECK(m.low == P(1, 2, 0));
  CHECK(m.high == P(1, 2, 0));
  m = RoundMid(P(0, 0, 0), P(1, 2, 0));
  CHECK(m.low == P(0, 0, 0));
  CHECK(m.high == P(1, 2, 0));
  m = RoundMid(P(1, 1, 1), P(1, 3, 1));
  CHECK(m.low == P(1, 2, 2));
  CHECK(m.high == P(1, 2, 0));
  // Across the origin.
  m = RoundMid(P(1, 4, 0), P(2, 4, 0));
  CHECK(m.low == P(0, 0, 0));
  CHECK(m.high == P(0, 0, 0));
}

TEST_CASE("vector rounding is componentwise") {
  const GridVector p = {P(1, 1, 1), P(0, 0, 0)};
  const GridVector q = {P(1, 3, 1), P(1, 2, 0)};
  const RoundedVectors r = RoundMid(p, q);
  for (size_t i = 0; i < p.size(); ++i) {
    const RoundedMidpoint m = RoundMid(p[i], q[i]);
    CHECK(r.low[i] == m.low);
    CHECK(r.high[i] == m.high);
  }
}

TEST_CASE("order") {
  CHECK(Leq(P(2, 3, 1), P(2, 3, 1)));
  CHECK(Leq(P(0, 0, 0), P(1, 1, 1)));
  CHECK_FALSE(Leq(P(1, 2, 0), P(0, 0, 0)));
}

// Brute-force closure of the covering relation for k <= 3, |y2|, r2 <= 4.
TEST_CASE("order equals the closure of covering steps") {
  for (int k = 1; k <= 3; ++k) {
    const auto win = Window(k, 4, 4);
    const auto big = Window(k, 6, 6);
    auto covers = [](const GridPoint& p, const GridPoint& q) {
      if (GridNorm2(p, q) != 2 || p.integral() == q.integral()) return false;
      return (p.integral() && ParityOf(p) == Parity::kEven) ||
             (q.integral() && ParityOf(q) == Parity::kOdd);
    };
    for (const GridPoint& p : win)
      for (const GridPoint& q : win) {
        bool leq = p == q || covers(p, q);
        for (const GridPoint& w : big) leq = leq || (covers(p, w) && covers(w, q));
        CHECK(Leq(p, q) == leq);
      }
  }
}

TEST_CASE("up and down sets") {
  CHECK(UpSet(P(1, 2, 0), 3) == std::vector{P(1, 2, 0)});
  CHECK(DownSet(P(0, 0, 0), 3) == std::vector{P(0, 0, 0)});
  const GridPoint p = P(0, 0, 2);  // even, origin at height 1
  std::vector<GridPoint> want;
  for (const GridPoint& q : Window(3, 4, 6))
    if (GridNorm2(p, q) <= 4 && Leq(p, q)) want.push_back(q);
  std::sort(want.begin(), want.end());
  CHECK(UpSet(p, 3) == want);
}

TEST_CASE("neighbours are at norm one") {
  for (const GridPoint& p : Window(3, 4, 4))
    for (const GridPoint& q : Neighbors(p, 3)) {
      CHECK(GridNorm2(p, q) == 2);
      CHECK(p.integral() != q.integral());
    }
  CHECK(Neighbors(P(0, 0, 0), 3).size() == 6);  // two per branch
  CHECK(Neighbors(P(1, 1, 1), 3).size() == 4);
}

TEST_CASE("slack") {
  CHECK(Pi2(P(0, 0, 0), P(0, 0, 0)) == 0);
  CHECK(Pi2(P(1, 2, 0), P(2, 2, 0)) == 4);
  CHECK(Pi2(P(0, 0, 2), P(1, 2, 0)) == 0);
}

TEST_CASE("moves on the star") {
  CHECK(MoveStar(StarPoint::Origin(), 2, 1) == StarPoint{2, 1});
  CHECK(MoveStar({2, 3}, 2, 2) == StarPoint{2, 5});
  CHECK(MoveStar({2, 1}, 0, 1) == StarPoint::Origin());
}

}  // namespace
}  // namespace mnmf
