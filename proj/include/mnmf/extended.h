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

#ifndef MNMF_EXTENDED_H_
#define MNMF_EXTENDED_H_

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace mnmf {

using Int = std::int64_t;

// Thrown when an internal invariant of the algorithm is found broken.  These
// indicate bugs, never bad input.
class InvariantError : public std::logic_error {
 public:
  explicit InvariantError(const std::string& what) : std::logic_error(what) {}
};

#define MNMF_CHECK(cond, msg)                                           \
  do {                                                                  \
    if (!(cond)) throw ::mnmf::InvariantError(std::string(msg) + " [" + \
                                              #cond + "]");             \
  } while (0)

// An integer extended by -inf and +inf.  Capacities, cut values and exchange
// capacities live here; infinities are never encoded as large numbers.
class Ext {
 public:
  enum class Kind : std::uint8_t { kNegInf, kFinite, kPosInf };

  constexpr Ext() = default;
  constexpr Ext(Int v) : value_(v) {}  // NOLINT: implicit on purpose

  static constexpr Ext PosInf() { return Ext(Kind::kPosInf); }
  static constexpr Ext NegInf() { return Ext(Kind::kNegInf); }

  constexpr bool finite() const { return kind_ == Kind::kFinite; }
  constexpr bool is_pos_inf() const { return kind_ == Kind::kPosInf; }
  constexpr bool is_neg_inf() const { return kind_ == Kind::kNegInf; }
  constexpr Kind kind() const { return kind_; }

  Int value() const {
    if (!finite()) throw InvariantError("value() of an infinite Ext");
    return value_;
  }

  // inf + (-inf) is undefined and throws.
  Ext operator+(const Ext& o) const {
    if (finite() && o.finite()) return Ext(value_ + o.value_);
    if ((is_pos_inf() && o.is_neg_inf()) || (is_neg_inf() && o.is_pos_inf()))
      throw InvariantError("inf - inf");
    return is_pos_inf() || o.is_pos_inf() ? PosInf() : NegInf();
  }
  Ext operator-() const {
    if (finite()) return Ext(-value_);
    return is_pos_inf() ? NegInf() : PosInf();
  }
  Ext operator-(const Ext& o) const { return *this + (-o); }
  Ext& operator+=(const Ext& o) { return *this = *this + o; }

  // Multiplication by a finite integer; 0 * inf is 0.
  Ext times(Int k) const {
    if (k == 0) return Ext(0);
    if (finite()) return Ext(value_ * k);
    return (k > 0) == is_pos_inf() ? PosInf() : NegInf();
  }

  friend constexpr bool operator==(const Ext& a, const Ext& b) {
    return a.kind_ == b.kind_ && (!a.finite() || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(const Ext& a,
                                                    const Ext& b) {
    if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
    if (!a.finite()) return std::strong_ordering::equal;
    return a.value_ <=> b.value_;
  }

  std::string str() const {
    if (is_pos_inf()) return "inf";
    if (is_neg_inf()) return "-inf";
    return std::to_string(value_);
  }

 private:
  constexpr explicit Ext(Kind k) : kind_(k) {}

  Kind kind_ = Kind::kFinite;
  Int value_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const Ext& e) {
  return os << e.str();
}

}  // namespace mnmf

#endif  // MNMF_EXTENDED_H_
