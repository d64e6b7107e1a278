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

/// \file symord/mobius.hpp
///
/// Moebius transforms on the Boolean lattice 2^N.
///
/// The classical transform inverts v(A) = sum_{B subset A} m(B) over exact
/// rationals. The ordinal transform inverts v(A) = symmax_{B subset A} m(B);
/// for a capacity the nonnegative solutions form the whole interval
/// [m_lower, m_upper] where m_upper = v and m_lower keeps v(A) only where v
/// strictly increases over every A \ {i}.

#pragma once

#include "symord/capacity.hpp"
#include "symord/rational.hpp"
#include "symord/rules.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace symord {

// ---------------------------------------------------------------------------
// Classical transform

/// Rational-valued set function.
class real_set_function {
 public:
  explicit real_set_function(int n) : n_(n), table_(table_size(n)) {}

  real_set_function(int n, std::vector<rational> table) : n_(n), table_(std::move(table)) {
    if (table_.size() != table_size(n)) throw std::invalid_argument("real_set_function: table length is not 2^n");
  }

  int players() const noexcept { return n_; }
  std::size_t size() const noexcept { return table_.size(); }
  const rational& operator[](player_set A) const { return table_[A.index()]; }
  rational& operator[](player_set A) { return table_[A.index()]; }
  std::span<const rational> values() const noexcept { return table_; }

  friend bool operator==(const real_set_function&, const real_set_function&) = default;

 private:
  int n_;
  std::vector<rational> table_;
};

/// m(A) = sum_{B subset A} (-1)^{|A \ B|} v(B), computed one coordinate at a
/// time in O(n 2^n).
inline real_set_function classical_mobius(const real_set_function& v) {
  real_set_function m = v;
  const int n = v.players();
  const std::size_t count = m.size();
  for (int i = 0; i < n; ++i) {
    const std::uint32_t bit = std::uint32_t{1} << i;
    for (std::size_t a = 0; a < count; ++a)
      if (a & bit) m[player_set(static_cast<std::uint32_t>(a))] -= m[player_set(static_cast<std::uint32_t>(a ^ bit))];
  }
  return m;
}

/// v(A) = sum_{B subset A} m(B).
inline real_set_function classical_zeta(const real_set_function& m) {
  real_set_function v = m;
  const int n = m.players();
  const std::size_t count = v.size();
  for (int i = 0; i < n; ++i) {
    const std::uint32_t bit = std::uint32_t{1} << i;
    for (std::size_t a = 0; a < count; ++a)
      if (a & bit) v[player_set(static_cast<std::uint32_t>(a))] += v[player_set(static_cast<std::uint32_t>(a ^ bit))];
  }
  return v;
}

/// Signed table of a Unit-scale set function as rationals.
inline real_set_function to_real(const set_function<unit_scale>& f) {
  real_set_function out(f.players());
  for_each_set(f.players(), [&](player_set A) {
    const auto& a = f[A];
    out[A] = a.is_negative() ? rational(-a.magnitude()) : a.magnitude();
  });
  return out;
}

inline real_set_function to_real(const capacity<unit_scale>& v) { return to_real(v.table()); }

// ---------------------------------------------------------------------------
// Ordinal transform

template <symmetric_scale Scale>
struct mobius_interval {
  set_function<Scale> lower;
  set_function<Scale> upper;
};

/// The interval [m_lower, m_upper] of nonnegative ordinal Moebius solutions.
template <symmetric_scale Scale>
mobius_interval<Scale> ordinal_mobius_interval(const capacity<Scale>& v) {
  const int n = v.players();
  set_function<Scale> lower(v.scale(), n);
  for_each_set(n, [&](player_set A) {
    bool strict = true;
    for (int i : A.players())
      if (!(v[A] > v[A.without(i)])) {
        strict = false;
        break;
      }
    if (strict) lower[A] = v[A];
  });
  return {std::move(lower), v.table()};
}

/// Canonical transform m(A) = g(A) symmax -[symmax_{B covered by A} g(B)],
/// the inner fold taken under `rule`. Solutions are only guaranteed for the
/// floor and angle rules, so ceil is rejected.
template <symmetric_scale Scale>
set_function<Scale> canonical_ordinal_mobius(const set_function<Scale>& g,
                                             aggregation_rule rule = aggregation_rule::floor) {
  if (rule == aggregation_rule::ceil)
    throw std::invalid_argument("canonical ordinal Moebius transform is undefined under the ceil rule");
  using value = typename Scale::value_type;
  const int n = g.players();
  set_function<Scale> m(g.scale(), n);
  std::vector<value> below;
  for_each_set(n, [&](player_set A) {
    below.clear();
    for (int i : A.players()) below.push_back(g[A.without(i)]);
    m[A] = sym_max(g[A], -fold_sym_max(std::span<const value>(below), rule));
  });
  return m;
}

/// m(A) = [max_{|A\B| even} v(B)] symmax -[max_{|A\B| odd} v(B)].
template <symmetric_scale Scale>
set_function<Scale> even_odd_mobius(const capacity<Scale>& v) {
  using value = typename Scale::value_type;
  const int n = v.players();
  set_function<Scale> m(v.scale(), n);
  for_each_set(n, [&](player_set A) {
    value even;
    value odd;
    for_each_subset(A, [&](player_set B) {
      if ((A.size() - B.size()) % 2 == 0)
        even = std::max(even, v[B]);
      else
        odd = std::max(odd, v[B]);
    });
    m[A] = sym_max(even, -odd);
  });
  return m;
}

/// max_B (m(B) min u_B(A)): the join of m over all B subset A when A is
/// nonempty, bottom when A is empty.
template <symmetric_scale Scale>
typename Scale::value_type reconstruct(const set_function<Scale>& m, player_set A) {
  if (!m.is_nonnegative()) throw std::invalid_argument("reconstruct: Moebius function must be nonnegative");
  typename Scale::value_type acc;
  if (A.empty()) return acc;
  for_each_subset(A, [&](player_set B) { acc = std::max(acc, m[B]); });
  return acc;
}

/// True iff folding m over the subsets of A under `rule` gives v(A) for
/// every A.
template <symmetric_scale Scale>
bool is_solution(const set_function<Scale>& m, const capacity<Scale>& v, aggregation_rule rule) {
  using value = typename Scale::value_type;
  if (m.players() != v.players()) return false;
  std::vector<value> terms;
  bool ok = true;
  for_each_set(v.players(), [&](player_set A) {
    if (!ok) return;
    terms.clear();
    for_each_subset(A, [&](player_set B) { terms.push_back(m[B]); });
    if (fold_sym_max(std::span<const value>(terms), rule) != v[A]) ok = false;
  });
  return ok;
}

/// The lower Moebius bound vanishes on every subset with more than k players.
template <symmetric_scale Scale>
bool is_k_maxitive(const capacity<Scale>& v, int k) {
  auto lower = ordinal_mobius_interval(v).lower;
  bool ok = true;
  for_each_set(v.players(), [&](player_set A) {
    if (A.size() > k && !lower[A].is_zero()) ok = false;
  });
  return ok;
}

/// Moebius transform of a possibility measure: pi on singletons.
template <symmetric_scale Scale>
set_function<Scale> mobius_possibility(const Scale& scale, std::span<const typename Scale::value_type> pi) {
  detail::check_distribution(scale, pi);
  const int n = static_cast<int>(pi.size());
  set_function<Scale> m(scale, n);
  for (int i = 1; i <= n; ++i) m[player_set::singleton(i)] = pi[i - 1];
  return m;
}

/// Moebius transform of a necessity measure.
///
/// Players are relabelled so that pi(s_1) <= ... <= pi(s_n) = 1. The tail set
/// T_i = {s_{i+1},...,s_n} receives n(pi(s_i)) when pi(s_i) < pi(s_{i+1}), and
/// bottom on a tie; T_0 = N uses pi(s_0) = 0. Every other subset is bottom.
template <symmetric_scale Scale>
set_function<Scale> mobius_necessity(const Scale& scale, std::span<const typename Scale::value_type> pi) {
  using value = typename Scale::value_type;
  detail::check_distribution(scale, pi);
  const int n = static_cast<int>(pi.size());
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 1);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return pi[a - 1] < pi[b - 1]; });

  set_function<Scale> m(scale, n);
  player_set tail = player_set::full(n);
  value previous;  // pi(s_0)
  for (int i = 0; i < n; ++i) {
    const value& next = pi[order[i] - 1];
    if (previous < next) m[tail] = negation_plus(scale, previous);
    tail = tail.without(order[i]);
    previous = next;
  }
  return m;
}

/// Evaluates n( max_{B disjoint from A} m_lower[v-bar](B) ), which recovers
/// v(A).
template <symmetric_scale Scale>
typename Scale::value_type conjugate_reconstruct(const capacity<Scale>& v, player_set A) {
  const auto m = ordinal_mobius_interval(conjugate(v)).lower;
  typename Scale::value_type acc;
  for_each_subset(A.complement(v.players()), [&](player_set B) { acc = std::max(acc, m[B]); });
  return negation_plus(v.scale(), acc);
}

}  // namespace symord
