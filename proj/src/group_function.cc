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

#include "mnmf/group_function.h"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>
#include <sstream>

namespace mnmf {

const char* GroupKindName(GroupKind kind) {
  switch (kind) {
    case GroupKind::kNodeFlowing:
      return "node-flowing";
    case GroupKind::kTight:
      return "tight";
    case GroupKind::kZeroForcing:
      return "zero";
  }
  return "?";
}

SignedGroupFunction SignedGroupFunction::NodeFlowing(int k, Int c) {
  MNMF_CHECK(k >= 1 && k <= kMaxSize, "group size out of range");
  MNMF_CHECK(c >= 0, "negative capacity");
  return SignedGroupFunction(GroupKind::kNodeFlowing, k, c);
}

SignedGroupFunction SignedGroupFunction::Tight(int k, Int c) {
  // rho-bar(empty) = c * min(k - 2, 0) vanishes only from k = 2 on.
  MNMF_CHECK(k >= 2 && k <= kMaxSize, "group size out of range");
  MNMF_CHECK(c >= 0, "negative capacity");
  return SignedGroupFunction(GroupKind::kTight, k, c);
}

SignedGroupFunction SignedGroupFunction::ZeroForcing() {
  return SignedGroupFunction(GroupKind::kZeroForcing, 1, 0);
}

Mask SignedGroupFunction::full_mask() const {
  return (Mask{1} << signed_size()) - 1;
}

Int SignedGroupFunction::EvalCounts(int a, int b, bool star) const {
  const int k = size_;
  switch (kind_) {
    case GroupKind::kZeroForcing:
      return 0;
    case GroupKind::kTight:
      return c_ * (std::min(a, 2) + std::min(k - 2 - b, 0));
    case GroupKind::kNodeFlowing: {
      const int u = std::min(a, 2);
      const int v = b == k ? 0 : (b == k - 1 ? 1 : 2);
      if (u == 2 && v == 2) return 2 * c_;
      if (u == 1 && v == 1) return star ? 0 : c_;
      if ((u == 1 && v == 2) || (u == 2 && v == 1)) return c_;
      return 0;
    }
  }
  return 0;
}

Int SignedGroupFunction::Eval(Mask x) const {
  const Mask members = (Mask{1} << size_) - 1;
  const Mask xp = x & members;
  const Mask xm = (x >> size_) & members;
  const int a = std::popcount(xp);
  const int b = std::popcount(xm);
  // 11*: X+ = {t+}, X- = S- minus {t-}.
  const bool star = a == 1 && b == size_ - 1 && (xp | xm) == members &&
                    (xp & xm) == 0;
  return EvalCounts(a, b, star);
}

Int SignedGroupFunction::Beta(Mask y, Mask z) const {
  MNMF_CHECK((y & z) == 0, "beta: Y and Z overlap");
  return Eval(y | (z << size_));
}

Int SignedGroupFunction::ExchangeCapacity(std::span<const Int> x, int i,
                                          int j) const {
  const int k = size_;
  MNMF_CHECK(static_cast<int>(x.size()) == 2 * k, "base vector size");
  MNMF_CHECK(i != j && i >= 0 && j >= 0 && i < 2 * k && j < 2 * k,
             "exchange pair out of range");
  // Free elements of each sign, sorted by decreasing x, with prefix sums.
  auto prefix_of = [&](int lo) {
    std::vector<Int> vals;
    for (int e = lo; e < lo + k; ++e)
      if (e != i && e != j) vals.push_back(x[e]);
    std::sort(vals.begin(), vals.end(), std::greater<>());
    std::vector<Int> pre(vals.size() + 1, 0);
    for (size_t t = 0; t < vals.size(); ++t) pre[t + 1] = pre[t] + vals[t];
    return pre;
  };
  const std::vector<Int> pre_plus = prefix_of(0);
  const std::vector<Int> pre_minus = prefix_of(k);
  const int fp = i < k ? 1 : 0;  // forced plus count
  const int fm = i < k ? 0 : 1;
  Int best = std::numeric_limits<Int>::max();
  for (int a = 0; a <= k; ++a) {
    const int pa = a - fp;
    if (pa < 0 || pa >= static_cast<int>(pre_plus.size())) continue;
    for (int b = 0; b <= k; ++b) {
      if (kind_ == GroupKind::kNodeFlowing && a == 1 && b == k - 1) continue;
      const int pb = b - fm;
      if (pb < 0 || pb >= static_cast<int>(pre_minus.size())) continue;
      const Int xs = x[i] + pre_plus[pa] + pre_minus[pb];
      best = std::min(best, EvalCounts(a, b, false) - xs);
    }
  }
  if (kind_ == GroupKind::kNodeFlowing) {
    // Class (1, k-1) splits into 11* and 11; enumerate it directly.
    for (int t = 0; t < k; ++t) {
      for (int u = 0; u < k; ++u) {
        Mask m = Mask{1} << t;
        for (int w = 0; w < k; ++w)
          if (w != u) m |= Mask{1} << (k + w);
        if (!((m >> i) & 1) || ((m >> j) & 1)) continue;
        Int xs = 0;
        for (int e = 0; e < 2 * k; ++e)
          if ((m >> e) & 1) xs += x[e];
        best = std::min(best, EvalCounts(1, k - 1, t == u) - xs);
      }
    }
  }
  MNMF_CHECK(best != std::numeric_limits<Int>::max(), "empty exchange class");
  return best;
}

std::vector<Int> SignedGroupFunction::GreedyBase() const {
  std::vector<Int> x(signed_size());
  Mask prefix = 0;
  Int prev = 0;
  for (int e = 0; e < signed_size(); ++e) {
    prefix |= Mask{1} << e;
    const Int cur = Eval(prefix);
    x[e] = cur - prev;
    prev = cur;
  }
  return x;
}

std::string SignedGroupFunction::DebugString() const {
  std::ostringstream out;
  out << GroupKindName(kind_) << "(k=" << size_ << ",c=" << c_ << ")";
  return out.str();
}

Int BruteExchangeCapacity(const SignedGroupFunction& g,
                          std::span<const Int> x, int i, int j) {
  Int best = std::numeric_limits<Int>::max();
  for (Mask m = 0; m <= g.full_mask(); ++m) {
    if (!((m >> i) & 1) || ((m >> j) & 1)) continue;
    Int xs = 0;
    for (int e = 0; e < g.signed_size(); ++e)
      if ((m >> e) & 1) xs += x[e];
    best = std::min(best, g.Eval(m) - xs);
  }
  return best;
}

bool BruteInBase(const SignedGroupFunction& g, std::span<const Int> x) {
  for (Mask m = 0; m <= g.full_mask(); ++m) {
    Int xs = 0;
    for (int e = 0; e < g.signed_size(); ++e)
      if ((m >> e) & 1) xs += x[e];
    if (xs > g.Eval(m)) return false;
    if (m == g.full_mask() && xs != g.Eval(m)) return false;
  }
  return true;
}

}  // namespace mnmf
