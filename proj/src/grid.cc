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

#include "mnmf/grid.h"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace mnmf {
namespace {

Int Abs(Int v) { return v < 0 ? -v : v; }
bool IsEven(Int v) { return v % 2 == 0; }

void RequireInGrid(const GridPoint& p) {
  if (!InGrid(p)) throw std::invalid_argument("point is not in the grid");
}

// Directions in which x can move: every branch at the origin, otherwise
// outward (own branch) and inward (0).
std::vector<int> Directions(const StarPoint& x, int k) {
  std::vector<int> dirs;
  if (x.is_origin()) {
    for (int s = 1; s <= k; ++s) dirs.push_back(s);
  } else {
    dirs = {x.branch, 0};
  }
  return dirs;
}

}  // namespace

std::ostream& operator<<(std::ostream& os, const GridPoint& p) {
  return os << "((" << p.x.branch << "," << p.x.radius2 << "/2)," << p.y2
            << "/2)";
}

const char* ParityName(Parity p) {
  switch (p) {
    case Parity::kEven:
      return "even";
    case Parity::kOdd:
      return "odd";
    case Parity::kNonIntEven:
      return "nonint-even";
    case Parity::kNonIntOdd:
      return "nonint-odd";
  }
  return "?";
}

bool InGrid(const GridPoint& p) {
  if (p.x.radius2 < 0 || p.x.branch < 0) return false;
  if ((p.x.radius2 == 0) != (p.x.branch == 0)) return false;
  return IsEven(p.x.radius2 - p.y2);
}

Int StarDist2(const StarPoint& a, const StarPoint& b) {
  if (a.branch == b.branch || a.is_origin() || b.is_origin())
    return Abs(a.radius2 - b.radius2);
  return a.radius2 + b.radius2;
}

Int GridNorm2(const GridPoint& p, const GridPoint& q) {
  return StarDist2(p.x, q.x) + Abs(p.y2 - q.y2);
}

Int VecNorm2(std::span<const GridPoint> p, std::span<const GridPoint> q) {
  if (p.size() != q.size())
    throw std::invalid_argument("grid vectors differ in length");
  Int best = 0;
  for (size_t i = 0; i < p.size(); ++i)
    best = std::max(best, GridNorm2(p[i], q[i]));
  return best;
}

Parity ParityOf(const GridPoint& p) {
  RequireInGrid(p);
  const Int half_diff = Abs(p.x.radius2 - p.y2) / 2;
  if (IsEven(p.x.radius2))
    return IsEven(half_diff) ? Parity::kEven : Parity::kOdd;
  // p + ((1/2)_0, 1/2) has |x - y| = half_diff - 1 up to sign.
  return IsEven(half_diff) ? Parity::kNonIntOdd : Parity::kNonIntEven;
}

RoundedMidpoint RoundMid(const GridPoint& p, const GridPoint& q) {
  RequireInGrid(p);
  RequireInGrid(q);
  // Midpoint in quadrupled units.
  int branch;
  Int r4;
  if (p.x.branch == q.x.branch || p.x.is_origin() || q.x.is_origin()) {
    branch = p.x.is_origin() ? q.x.branch : p.x.branch;
    r4 = p.x.radius2 + q.x.radius2;
  } else if (p.x.radius2 >= q.x.radius2) {
    branch = p.x.branch;
    r4 = p.x.radius2 - q.x.radius2;
  } else {
    branch = q.x.branch;
    r4 = q.x.radius2 - p.x.radius2;
  }
  const Int y4 = p.y2 + q.y2;
  MNMF_CHECK(IsEven(r4 - y4), "midpoint coordinates of mixed parity");

  if (IsEven(r4)) {
    const GridPoint w = GridPoint::Make(branch, r4 / 2, y4 / 2);
    if (InGrid(w)) return {w, w};
    // Center of a square; its integral corners are the rounding pair.
    GridPoint a, b;
    if (IsEven(w.x.radius2)) {
      a = GridPoint::Make(branch, w.x.radius2, w.y2 - 1);
      b = GridPoint::Make(branch, w.x.radius2, w.y2 + 1);
    } else {
      a = GridPoint::Make(branch, w.x.radius2 - 1, w.y2);
      b = GridPoint::Make(branch, w.x.radius2 + 1, w.y2);
    }
    if (ParityOf(a) == Parity::kEven) return {a, b};
    return {b, a};
  }

  // Midpoint of a grid edge.
  GridPoint a, b;
  if (IsEven((r4 - y4) / 2)) {
    a = GridPoint::Make(branch, (r4 + 1) / 2, (y4 + 1) / 2);
    b = GridPoint::Make(branch, (r4 - 1) / 2, (y4 - 1) / 2);
  } else {
    a = GridPoint::Make(branch, (r4 + 1) / 2, (y4 - 1) / 2);
    b = GridPoint::Make(branch, (r4 - 1) / 2, (y4 + 1) / 2);
  }
  MNMF_CHECK(InGrid(a) && InGrid(b), "edge endpoints outside the grid");
  const GridPoint& integral = a.integral() ? a : b;
  const GridPoint& other = a.integral() ? b : a;
  if (ParityOf(integral) == Parity::kEven) return {integral, other};
  return {other, integral};
}

RoundedVectors RoundMid(std::span<const GridPoint> p,
                        std::span<const GridPoint> q) {
  if (p.size() != q.size())
    throw std::invalid_argument("grid vectors differ in length");
  RoundedVectors out;
  out.low.reserve(p.size());
  out.high.reserve(p.size());
  for (size_t i = 0; i < p.size(); ++i) {
    RoundedMidpoint r = RoundMid(p[i], q[i]);
    out.low.push_back(r.low);
    out.high.push_back(r.high);
  }
  return out;
}

bool Leq(const GridPoint& p, const GridPoint& q) {
  RequireInGrid(p);
  RequireInGrid(q);
  if (p == q) return true;
  const Parity pp = ParityOf(p);
  const Parity pq = ParityOf(q);
  const bool q_nonint = !q.integral();
  const Int norm2 = GridNorm2(p, q);
  if (pp == Parity::kEven) return (q_nonint || pq == Parity::kOdd) && norm2 == 2;
  if (!p.integral()) return pq == Parity::kOdd && norm2 == 2;
  return false;
}

StarPoint MoveStar(const StarPoint& x, int branch, Int eps2) {
  MNMF_CHECK(eps2 >= 0, "negative move");
  if (x.is_origin()) {
    MNMF_CHECK(branch > 0, "no direction given at the origin");
    return StarPoint::On(branch, eps2);
  }
  if (branch == 0) {
    MNMF_CHECK(x.radius2 >= eps2, "move past the origin");
    return StarPoint::On(x.branch, x.radius2 - eps2);
  }
  MNMF_CHECK(branch == x.branch, "move onto a foreign branch");
  return StarPoint::On(x.branch, x.radius2 + eps2);
}

std::vector<GridPoint> Neighbors(const GridPoint& p, int k) {
  RequireInGrid(p);
  std::vector<GridPoint> out;
  for (int dir : Directions(p.x, k)) {
    StarPoint x = MoveStar(p.x, dir, 1);
    out.push_back({x, p.y2 - 1});
    out.push_back({x, p.y2 + 1});
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::vector<GridPoint> Ball2(const GridPoint& p, int k) {
  std::vector<GridPoint> out = {p};
  for (const GridPoint& a : Neighbors(p, k)) {
    out.push_back(a);
    for (const GridPoint& b : Neighbors(a, k)) out.push_back(b);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<GridPoint> UpSet(const GridPoint& p, int k) {
  std::vector<GridPoint> out;
  for (const GridPoint& q : Ball2(p, k))
    if (Leq(p, q)) out.push_back(q);
  return out;
}

std::vector<GridPoint> DownSet(const GridPoint& p, int k) {
  std::vector<GridPoint> out;
  for (const GridPoint& q : Ball2(p, k))
    if (Leq(q, p)) out.push_back(q);
  return out;
}

}  // namespace mnmf
