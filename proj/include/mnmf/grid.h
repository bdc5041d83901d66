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

// Exact geometry of the infinite k-star T and of the grid G in T x R.
//
// A point of T is a branch id in {1..k} plus a radius; the origin is
// canonicalized to branch 0.  A point of G pairs such a point with a height,
// and every coordinate is stored doubled so that half-integers are exact:
// radius2 = 2 * radius, y2 = 2 * height.  A pair (radius2, y2) is in G iff
// both have the same parity.

#ifndef MNMF_GRID_H_
#define MNMF_GRID_H_

#include <compare>
#include <ostream>
#include <span>
#include <vector>

#include "mnmf/extended.h"

namespace mnmf {

struct StarPoint {
  int branch = 0;    // 1..k, or 0 at the origin.
  Int radius2 = 0;   // twice the distance to the origin.

  static StarPoint Origin() { return {}; }
  // Canonicalizes the origin to branch 0.
  static StarPoint On(int branch, Int radius2) {
    return radius2 == 0 ? StarPoint{} : StarPoint{branch, radius2};
  }
  bool is_origin() const { return radius2 == 0; }

  friend auto operator<=>(const StarPoint&, const StarPoint&) = default;
};

struct GridPoint {
  StarPoint x;
  Int y2 = 0;

  static GridPoint Make(int branch, Int radius2, Int y2) {
    return {StarPoint::On(branch, radius2), y2};
  }
  bool integral() const { return x.radius2 % 2 == 0 && y2 % 2 == 0; }

  friend auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

std::ostream& operator<<(std::ostream& os, const GridPoint& p);

using GridVector = std::vector<GridPoint>;

enum class Parity { kEven, kOdd, kNonIntEven, kNonIntOdd };

const char* ParityName(Parity p);

// True iff p is a well-formed point of G.
bool InGrid(const GridPoint& p);

// 2 * dist(a, b) on T.
Int StarDist2(const StarPoint& a, const StarPoint& b);

// 2 * ||p - q|| = 2 * (dist(x, x') + |y - y'|).  Even for p, q in G.
Int GridNorm2(const GridPoint& p, const GridPoint& q);

// max_i GridNorm2(p_i, q_i).  Throws std::invalid_argument on length mismatch.
Int VecNorm2(std::span<const GridPoint> p, std::span<const GridPoint> q);

// Throws std::invalid_argument if p is not in G.
Parity ParityOf(const GridPoint& p);

struct RoundedMidpoint {
  GridPoint low;   // floor((p + q) / 2)
  GridPoint high;  // ceil((p + q) / 2)
};

// The unique pair low <= high of G with (low + high) / 2 == (p + q) / 2.
RoundedMidpoint RoundMid(const GridPoint& p, const GridPoint& q);

// The partial order of G: even < non-integral < odd along grid edges.
bool Leq(const GridPoint& p, const GridPoint& q);

// Adjacent points of p in G; k is the number of branches of T.
std::vector<GridPoint> Neighbors(const GridPoint& p, int k);

// {q : q >= p} and {q : q <= p}, sorted.
std::vector<GridPoint> UpSet(const GridPoint& p, int k);
std::vector<GridPoint> DownSet(const GridPoint& p, int k);

// 2 * pi(u, v) where pi((x,y),(x',y')) = dist(x, x') - y - y'.
inline Int Pi2(const GridPoint& u, const GridPoint& v) {
  return StarDist2(u.x, v.x) - u.y2 - v.y2;
}

// Moves x by eps2/2 toward `branch` (from the origin), outward along its own
// branch (branch == its branch), or toward the origin (branch == 0).  Used by
// the cut-to-potential map.
StarPoint MoveStar(const StarPoint& x, int branch, Int eps2);

// Componentwise rounded midpoints of two grid vectors.
struct RoundedVectors {
  GridVector low;
  GridVector high;
};
RoundedVectors RoundMid(std::span<const GridPoint> p,
                        std::span<const GridPoint> q);

}  // namespace mnmf

#endif  // MNMF_GRID_H_
