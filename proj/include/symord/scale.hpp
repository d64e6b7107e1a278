// Copyright 2026 The symord Authors
//
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

/// \file symord/scale.hpp
///
/// The symmetric linearly ordered scale L = L- u L+ and its operations.
///
/// A value of L is a sign together with a magnitude taken from the positive
/// half L+. Two magnitude kinds exist: a level index on a finite chain
/// 0..K, and an exact rational in [0,1]. The kind is a template parameter, so
/// values of different kinds cannot meet in one expression.
///
/// The symmetric maximum returns the absolutely larger operand, or zero when
/// the operands are opposite. The symmetric minimum has magnitude |a| min |b|
/// and is negative exactly when the operands have opposite signs. Restricted
/// to L+ they are the ordinary max and min.

#pragma once

#include "symord/rational.hpp"

#include <compare>
#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace symord {

enum class sign : std::int8_t { negative = -1, zero = 0, positive = 1 };

/// Index into a finite chain 0 < 1 < ... < K.
struct level {
  int index = 0;

  friend constexpr auto operator<=>(level, level) = default;
};

template <class M>
concept magnitude = std::default_initializable<M> && std::totally_ordered<M> && std::copyable<M>;

/// A signed element of L in canonical form: sign is zero iff the magnitude is
/// the bottom of L+. Negative zero does not exist.
template <magnitude Magnitude>
class scale_value {
 public:
  using magnitude_type = Magnitude;

  scale_value() = default;

  scale_value(sign s, Magnitude m) : sign_(s), mag_(std::move(m)) {
    if (mag_ < Magnitude{}) throw std::invalid_argument("scale_value: negative magnitude");
    if (mag_ == Magnitude{}) {
      sign_ = sign::zero;
    } else if (sign_ == sign::zero) {
      throw std::invalid_argument("scale_value: zero sign with nonzero magnitude");
    }
  }

  static scale_value positive(Magnitude m) { return {sign::positive, std::move(m)}; }
  static scale_value negative(Magnitude m) { return {sign::negative, std::move(m)}; }
  static scale_value zero() { return {}; }

  sign sgn() const noexcept { return sign_; }
  const Magnitude& magnitude() const noexcept { return mag_; }

  bool is_zero() const noexcept { return sign_ == sign::zero; }
  bool is_negative() const noexcept { return sign_ == sign::negative; }
  bool is_nonnegative() const noexcept { return sign_ != sign::negative; }

  /// Reflection a -> -a.
  friend scale_value operator-(const scale_value& a) {
    scale_value r = a;
    if (r.sign_ == sign::positive)
      r.sign_ = sign::negative;
    else if (r.sign_ == sign::negative)
      r.sign_ = sign::positive;
    return r;
  }

  friend bool operator==(const scale_value& a, const scale_value& b) {
    return a.sign_ == b.sign_ && a.mag_ == b.mag_;
  }

  /// L- carries the reversed order of L+, then zero, then L+.
  friend std::strong_ordering operator<=>(const scale_value& a, const scale_value& b) {
    if (a.sign_ != b.sign_)
      return static_cast<int>(a.sign_) <=> static_cast<int>(b.sign_);
    if (a.mag_ == b.mag_) return std::strong_ordering::equal;
    bool smaller_mag = a.mag_ < b.mag_;
    if (a.sign_ == sign::negative) smaller_mag = !smaller_mag;
    return smaller_mag ? std::strong_ordering::less : std::strong_ordering::greater;
  }

 private:
  sign sign_ = sign::zero;
  Magnitude mag_{};
};

/// Finite scale with K+1 levels on the positive side.
class levels_scale {
 public:
  using magnitude_type = level;
  using value_type = scale_value<level>;

  explicit levels_scale(int top_index) : top_(top_index) {
    if (top_index < 1) throw std::invalid_argument("levels_scale: need K >= 1");
  }

  int top_index() const noexcept { return top_; }
  level bottom() const noexcept { return {}; }
  level top() const noexcept { return {top_}; }
  bool contains(const level& m) const noexcept { return 0 <= m.index && m.index <= top_; }

  /// The order-reversing involution of a finite chain.
  level negate(const level& m) const noexcept { return {top_ - m.index}; }

  value_type at(int index) const {
    if (index < -top_ || index > top_) throw std::out_of_range("levels_scale: index outside -K..K");
    return index < 0 ? value_type::negative({-index}) : value_type::positive({index});
  }

  friend bool operator==(const levels_scale&, const levels_scale&) = default;

 private:
  int top_;
};

/// The real interval [-1,1] with exact rational values.
class unit_scale {
 public:
  using magnitude_type = rational;
  using value_type = scale_value<rational>;

  rational bottom() const { return 0; }
  rational top() const { return 1; }
  bool contains(const rational& m) const { return m >= 0 && m <= 1; }

  /// Fixed to x -> 1 - x.
  rational negate(const rational& m) const { return 1 - m; }

  value_type at(const rational& x) const {
    if (x < -1 || x > 1) throw std::out_of_range("unit_scale: value outside [-1,1]");
    return x < 0 ? value_type::negative(-x) : value_type::positive(x);
  }

  friend bool operator==(const unit_scale&, const unit_scale&) { return true; }
};

template <class S>
concept symmetric_scale = requires(const S& s, const typename S::magnitude_type& m) {
  typename S::magnitude_type;
  typename S::value_type;
  requires std::same_as<typename S::value_type, scale_value<typename S::magnitude_type>>;
  { s.bottom() } -> std::convertible_to<typename S::magnitude_type>;
  { s.top() } -> std::convertible_to<typename S::magnitude_type>;
  { s.contains(m) } -> std::same_as<bool>;
  { s.negate(m) } -> std::convertible_to<typename S::magnitude_type>;
};

template <symmetric_scale S>
typename S::value_type one(const S& scale) {
  return S::value_type::positive(scale.top());
}

/// True when |a| lies on the scale.
template <symmetric_scale S>
bool on_scale(const S& scale, const typename S::value_type& a) {
  return scale.contains(a.magnitude());
}

template <magnitude M>
scale_value<M> reflect(const scale_value<M>& a) {
  return -a;
}

template <magnitude M>
scale_value<M> abs_val(const scale_value<M>& a) {
  return a.is_negative() ? -a : a;
}

/// -1, 0 or 1 of the given scale.
template <symmetric_scale S>
typename S::value_type sign_of(const S& scale, const typename S::value_type& a) {
  switch (a.sgn()) {
    case sign::negative: return S::value_type::negative(scale.top());
    case sign::positive: return S::value_type::positive(scale.top());
    case sign::zero: break;
  }
  return {};
}

/// Negation n on L+. Undefined on L-.
template <symmetric_scale S>
typename S::value_type negation_plus(const S& scale, const typename S::value_type& a) {
  if (a.is_negative()) throw std::domain_error("negation is defined on nonnegative values only");
  if (!on_scale(scale, a)) throw std::out_of_range("negation: value not on the scale");
  return S::value_type::positive(scale.negate(a.magnitude()));
}

/// Symmetric maximum.
template <magnitude M>
scale_value<M> sym_max(const scale_value<M>& a, const scale_value<M>& b) {
  if (b == -a) return {};
  const M& ma = a.magnitude();
  const M& mb = b.magnitude();
  if (ma == mb) return a;  // equal magnitudes, not opposite: a == b
  return ma < mb ? b : a;
}

/// Symmetric minimum.
template <magnitude M>
scale_value<M> sym_min(const scale_value<M>& a, const scale_value<M>& b) {
  const M& m = a.magnitude() < b.magnitude() ? a.magnitude() : b.magnitude();
  return {a.sgn() != b.sgn() ? sign::negative : sign::positive, m};
}

/// Lattice join and meet of L.
template <magnitude M>
scale_value<M> lattice_max(const scale_value<M>& a, const scale_value<M>& b) {
  return a < b ? b : a;
}

template <magnitude M>
scale_value<M> lattice_min(const scale_value<M>& a, const scale_value<M>& b) {
  return b < a ? b : a;
}

/// f+ = f v 0 and f- = (-f) v 0, pointwise on one value.
template <magnitude M>
scale_value<M> positive_part(const scale_value<M>& a) {
  return a.is_negative() ? scale_value<M>{} : a;
}

template <magnitude M>
scale_value<M> negative_part(const scale_value<M>& a) {
  return a.is_negative() ? -a : scale_value<M>{};
}

}  // namespace symord
