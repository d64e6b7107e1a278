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

/// \file symord/rules.hpp
///
/// Computation rules for folds of the symmetric maximum.
///
/// The symmetric maximum is associative on a sequence a_1..a_n exactly when
/// max a_i != -min a_i. When the sequence hits that case, a rule fixes the
/// result:
///
///   floor  combine nonnegative and negative values separately, then join
///          the two partial results;
///   ceil   discard one maximal opposite pair at a time until the condition
///          holds again;
///   angle  same as ceil, but every duplicate of the maximal opposite pair is
///          discarded with it.
///
/// Inputs are sequences: duplicates are significant for ceil and angle.

#pragma once

#include "symord/scale.hpp"

#include <algorithm>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace symord {

enum class aggregation_rule { floor, ceil, angle };

inline std::string_view to_string(aggregation_rule rule) {
  switch (rule) {
    case aggregation_rule::floor: return "floor";
    case aggregation_rule::ceil: return "ceil";
    case aggregation_rule::angle: return "angle";
  }
  return "?";
}

inline std::optional<aggregation_rule> parse_rule(std::string_view name) {
  if (name == "floor") return aggregation_rule::floor;
  if (name == "ceil") return aggregation_rule::ceil;
  if (name == "angle") return aggregation_rule::angle;
  return std::nullopt;
}

inline constexpr aggregation_rule all_rules[] = {aggregation_rule::floor, aggregation_rule::ceil,
                                                 aggregation_rule::angle};

/// max != -min over the sequence; vacuously true below two elements.
template <magnitude M>
bool is_fold_unambiguous(std::span<const scale_value<M>> values) {
  if (values.size() < 2) return true;
  auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  return *hi != -*lo;
}

namespace detail {

// Fold of a sorted range whose extremes are not opposite: the absolutely
// larger extreme wins.
template <magnitude M>
scale_value<M> settled_fold(std::span<const scale_value<M>> sorted) {
  if (sorted.empty()) return {};
  const auto& lo = sorted.front();
  const auto& hi = sorted.back();
  return lo.magnitude() > hi.magnitude() ? lo : hi;
}

}  // namespace detail

/// Folds the symmetric maximum over `values` under `rule`. An empty sequence
/// folds to zero.
template <magnitude M>
scale_value<M> fold_sym_max(std::span<const scale_value<M>> values, aggregation_rule rule) {
  using value = scale_value<M>;
  if (rule == aggregation_rule::floor) {
    value best_nonneg;
    value worst_neg;
    for (const auto& a : values) {
      if (a.is_negative())
        worst_neg = std::min(worst_neg, a);
      else
        best_nonneg = std::max(best_nonneg, a);
    }
    return sym_max(best_nonneg, worst_neg);
  }

  std::vector<value> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  std::size_t lo = 0;
  std::size_t hi = sorted.size();  // live range is [lo, hi)
  while (hi - lo >= 2 && sorted[hi - 1] == -sorted[lo]) {
    if (sorted[lo].is_zero()) return {};  // everything left is zero
    if (rule == aggregation_rule::ceil) {
      ++lo;
      --hi;
    } else {
      const value top = sorted[hi - 1];
      const value bottom = sorted[lo];
      while (lo < hi && sorted[lo] == bottom) ++lo;
      while (hi > lo && sorted[hi - 1] == top) --hi;
    }
  }
  return detail::settled_fold(std::span<const value>(sorted.data() + lo, hi - lo));
}

template <magnitude M>
scale_value<M> fold_sym_max(std::initializer_list<scale_value<M>> values, aggregation_rule rule) {
  return fold_sym_max(std::span<const scale_value<M>>(values.begin(), values.size()), rule);
}

/// Left fold ((a1 v a2) v a3) ... with no rule. Only meaningful when
/// is_fold_unambiguous holds.
template <magnitude M>
scale_value<M> left_fold_sym_max(std::span<const scale_value<M>> values) {
  scale_value<M> acc;
  for (const auto& a : values) acc = sym_max(acc, a);
  return acc;
}

/// Fold of the symmetric minimum (associative, neutral element 1).
template <symmetric_scale S>
typename S::value_type fold_sym_min(const S& scale, std::span<const typename S::value_type> values) {
  auto acc = one(scale);
  for (const auto& a : values) acc = sym_min(acc, a);
  return acc;
}

}  // namespace symord
