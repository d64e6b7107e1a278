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

/// \file symord/choquet.hpp
///
/// Choquet integrals over exact rationals: the nonnegative integral, its
/// asymmetric and symmetric (Sipos) extensions to signed profiles, and their
/// Moebius forms. Profiles are indexed by player, f[i-1] for player i.
///
/// Only meaningful on the Unit scale; ordinal scales have no subtraction.

#pragma once

#include "symord/mobius.hpp"
#include "symord/rational.hpp"

#include <algorithm>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

namespace symord {

namespace detail {

inline void check_profile_size(const real_set_function& v, std::span<const rational> f) {
  if (static_cast<int>(f.size()) != v.players())
    throw std::invalid_argument("profile length does not match the number of players");
}

/// Player ids sorted by ascending score; stable on ties.
inline std::vector<int> ascending_order(std::span<const rational> f) {
  std::vector<int> order(f.size());
  std::iota(order.begin(), order.end(), 1);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return f[a - 1] < f[b - 1]; });
  return order;
}

inline std::vector<rational> clamp_below(std::span<const rational> f, bool negate) {
  std::vector<rational> out;
  out.reserve(f.size());
  for (const auto& x : f) {
    rational y = negate ? rational(-x) : x;
    out.push_back(y > 0 ? y : rational(0));
  }
  return out;
}

}  // namespace detail

inline std::vector<rational> positive_part(std::span<const rational> f) { return detail::clamp_below(f, false); }
inline std::vector<rational> negative_part(std::span<const rational> f) { return detail::clamp_below(f, true); }

/// v-bar(A) = 1 - v(A^c).
inline real_set_function real_conjugate(const real_set_function& v) {
  const int n = v.players();
  real_set_function out(n);
  for_each_set(n, [&](player_set A) { out[A] = 1 - v[A.complement(n)]; });
  return out;
}

/// sum_i [f_(i) - f_(i-1)] v({(i),...,(n)}), f_(0) = 0.
inline rational choquet(const real_set_function& v, std::span<const rational> f) {
  detail::check_profile_size(v, f);
  for (const auto& x : f)
    if (x < 0) throw std::invalid_argument("choquet: profile must be nonnegative");
  const auto order = detail::ascending_order(f);
  rational sum = 0;
  rational previous = 0;
  player_set upper = player_set::full(v.players());
  for (int i : order) {
    sum += (f[i - 1] - previous) * v[upper];
    previous = f[i - 1];
    upper = upper.without(i);
  }
  return sum;
}

/// C_v(f+) - C_{v-bar}(f-).
inline rational choquet_asymmetric(const real_set_function& v, std::span<const rational> f) {
  return choquet(v, positive_part(f)) - choquet(real_conjugate(v), negative_part(f));
}

/// C_v(f+) - C_v(f-).
inline rational choquet_symmetric(const real_set_function& v, std::span<const rational> f) {
  return choquet(v, positive_part(f)) - choquet(v, negative_part(f));
}

/// Sorted closed form of the symmetric integral, with
/// f_(1) <= ... <= f_(p) < 0 <= f_(p+1) <= ... <= f_(n):
///
///   sum_{i<p} (f_(i) - f_(i+1)) v({(1)..(i)}) + f_(p) v({(1)..(p)})
///   + f_(p+1) v({(p+1)..(n)}) + sum_{i>p+1} (f_(i) - f_(i-1)) v({(i)..(n)})
inline rational sipos_explicit(const real_set_function& v, std::span<const rational> f) {
  detail::check_profile_size(v, f);
  const auto order = detail::ascending_order(f);
  const int n = v.players();
  auto value_at = [&](int position) -> const rational& { return f[order[position - 1] - 1]; };
  auto head = [&](int i) {  // {(1),...,(i)}
    player_set s;
    for (int k = 1; k <= i; ++k) s = s.with(order[k - 1]);
    return s;
  };
  auto tail = [&](int i) {  // {(i),...,(n)}
    player_set s;
    for (int k = i; k <= n; ++k) s = s.with(order[k - 1]);
    return s;
  };
  int p = 0;
  while (p < n && value_at(p + 1) < 0) ++p;

  rational sum = 0;
  for (int i = 1; i <= p - 1; ++i) sum += (value_at(i) - value_at(i + 1)) * v[head(i)];
  if (p >= 1) sum += value_at(p) * v[head(p)];
  if (p + 1 <= n) sum += value_at(p + 1) * v[tail(p + 1)];
  for (int i = p + 2; i <= n; ++i) sum += (value_at(i) - value_at(i - 1)) * v[tail(i)];
  return sum;
}

/// sum_{A nonempty} m(A) min_{i in A} f_i, for f >= 0.
inline rational choquet_mobius(const real_set_function& m, std::span<const rational> f) {
  detail::check_profile_size(m, f);
  for (const auto& x : f)
    if (x < 0) throw std::invalid_argument("choquet_mobius: profile must be nonnegative");
  rational sum = 0;
  for_each_set(m.players(), [&](player_set A) {
    if (A.empty()) return;
    const auto members = A.players();
    rational low = f[members.front() - 1];
    for (int i : members) low = std::min(low, f[i - 1]);
    sum += m[A] * low;
  });
  return sum;
}

/// sum_{A nonempty} m(A) [min_{A} f+ - min_{A} f-].
inline rational sipos_mobius(const real_set_function& m, std::span<const rational> f) {
  detail::check_profile_size(m, f);
  const auto plus = positive_part(f);
  const auto minus = negative_part(f);
  rational sum = 0;
  for_each_set(m.players(), [&](player_set A) {
    if (A.empty()) return;
    const auto members = A.players();
    rational low_plus = plus[members.front() - 1];
    rational low_minus = minus[members.front() - 1];
    for (int i : members) {
      low_plus = std::min(low_plus, plus[i - 1]);
      low_minus = std::min(low_minus, minus[i - 1]);
    }
    sum += m[A] * (low_plus - low_minus);
  });
  return sum;
}

}  // namespace symord
