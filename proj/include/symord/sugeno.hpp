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

/// \file symord/sugeno.hpp
///
/// Sugeno integrals on the symmetric scale.
///
/// For f >= 0 the Sugeno integral is max_i [f_(i) min v({(i),...,(n)})], with
/// (.) an ascending sort of f. On signed profiles the symmetric integral is
///
///   S(f+) symmax -S(f-)
///
/// and has three equivalent evaluations here: the definition, the sorted
/// two-block form (negative block uses heads {(1)..(i)}, positive block
/// tails {(i)..(n)}), and a three-block Moebius form. Three alternative
/// integrals fold the same kind of terms in one pass under the angle or ceil
/// rule instead.
///
/// Ties in f may be broken in any order: every formula here is invariant
/// under permutations inside a tie.

#pragma once

#include "symord/capacity.hpp"
#include "symord/mobius.hpp"
#include "symord/rules.hpp"
#include "symord/scale.hpp"

#include <algorithm>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

namespace symord {

template <symmetric_scale Scale>
using profile = std::vector<typename Scale::value_type>;

enum class mobius_representative { lower, upper };

/// Ascending sort of a profile: order[k] is the player at position k+1, and
/// the first `split` positions hold the strictly negative scores.
///
/// Ties among nonnegative scores go by ascending player id, ties among
/// negative scores by descending id, so sorting -f reverses every tie group
/// of f and the two-block terms of -f are the reflections of those of f.
struct sorted_profile {
  std::vector<int> order;
  int split = 0;
};

template <magnitude M>
sorted_profile sort_profile(std::span<const scale_value<M>> f) {
  sorted_profile out;
  out.order.resize(f.size());
  std::iota(out.order.begin(), out.order.end(), 1);
  std::sort(out.order.begin(), out.order.end(), [&](int a, int b) {
    if (f[a - 1] != f[b - 1]) return f[a - 1] < f[b - 1];
    return f[a - 1].is_negative() ? a > b : a < b;
  });
  for (int player : out.order)
    if (f[player - 1].is_negative()) ++out.split;
  return out;
}

namespace detail {

template <symmetric_scale Scale>
void check_profile(const capacity<Scale>& v, std::span<const typename Scale::value_type> f) {
  if (static_cast<int>(f.size()) != v.players())
    throw std::invalid_argument("profile length does not match the number of players");
  for (const auto& x : f)
    if (!on_scale(v.scale(), x)) throw std::invalid_argument("profile value is not on the scale");
}

template <magnitude M>
void require_nonnegative(std::span<const scale_value<M>> f, const char* what) {
  for (const auto& x : f)
    if (x.is_negative()) throw std::invalid_argument(std::string(what) + ": profile must be nonnegative");
}

template <magnitude M>
std::vector<scale_value<M>> map_parts(std::span<const scale_value<M>> f, bool negative) {
  std::vector<scale_value<M>> out;
  out.reserve(f.size());
  for (const auto& x : f) out.push_back(negative ? negative_part(x) : positive_part(x));
  return out;
}

}  // namespace detail

template <magnitude M>
std::vector<scale_value<M>> positive_part(std::span<const scale_value<M>> f) {
  return detail::map_parts(f, false);
}

template <magnitude M>
std::vector<scale_value<M>> negative_part(std::span<const scale_value<M>> f) {
  return detail::map_parts(f, true);
}

/// Sugeno integral of a nonnegative profile.
template <symmetric_scale Scale>
typename Scale::value_type sugeno(const capacity<Scale>& v, std::span<const typename Scale::value_type> f) {
  detail::check_profile(v, f);
  detail::require_nonnegative(f, "sugeno");
  const auto sorted = sort_profile(f);
  typename Scale::value_type acc;
  player_set upper = v.ground_set();
  for (int i : sorted.order) {
    acc = std::max(acc, std::min(f[i - 1], v[upper]));
    upper = upper.without(i);
  }
  return acc;
}

/// max_{A nonempty} (min_{i in A} f_i  min  m(A)) for nonnegative m and f.
template <symmetric_scale Scale>
typename Scale::value_type sugeno_mobius(const set_function<Scale>& m, std::span<const typename Scale::value_type> f) {
  if (static_cast<int>(f.size()) != m.players())
    throw std::invalid_argument("profile length does not match the number of players");
  if (!m.is_nonnegative()) throw std::invalid_argument("sugeno_mobius: Moebius function must be nonnegative");
  detail::require_nonnegative(f, "sugeno_mobius");
  typename Scale::value_type acc;
  for_each_set(m.players(), [&](player_set A) {
    if (A.empty()) return;
    auto term = m[A];
    for (int i : A.players()) term = std::min(term, f[i - 1]);
    acc = std::max(acc, term);
  });
  return acc;
}

/// S(f+) symmax -S(f-).
template <symmetric_scale Scale>
typename Scale::value_type sugeno_symmetric(const capacity<Scale>& v,
                                            std::span<const typename Scale::value_type> f) {
  detail::check_profile(v, f);
  const auto plus = positive_part(f);
  const auto minus = negative_part(f);
  return sym_max(sugeno(v, std::span(plus)), -sugeno(v, std::span(minus)));
}

/// Terms of the sorted two-block form: f_(i) symmin v({(1)..(i)}) for the
/// negative positions i <= p, f_(i) symmin v({(i)..(n)}) for i > p.
template <symmetric_scale Scale>
struct two_block_terms {
  std::vector<typename Scale::value_type> negative_block;
  std::vector<typename Scale::value_type> positive_block;
  sorted_profile sorted;

  std::vector<typename Scale::value_type> all() const {
    auto out = negative_block;
    out.insert(out.end(), positive_block.begin(), positive_block.end());
    return out;
  }
};

template <symmetric_scale Scale>
two_block_terms<Scale> sorted_terms(const capacity<Scale>& v, std::span<const typename Scale::value_type> f) {
  detail::check_profile(v, f);
  two_block_terms<Scale> out;
  out.sorted = sort_profile(f);
  const auto& order = out.sorted.order;
  const int n = v.players();
  const int p = out.sorted.split;

  player_set head;
  for (int k = 0; k < p; ++k) {
    head = head.with(order[k]);
    out.negative_block.push_back(sym_min(f[order[k] - 1], v[head]));
  }
  player_set tail;
  for (int k = p; k < n; ++k) tail = tail.with(order[k]);
  for (int k = p; k < n; ++k) {
    out.positive_block.push_back(sym_min(f[order[k] - 1], v[tail]));
    tail = tail.without(order[k]);
  }
  return out;
}

/// The symmetric integral through the sorted two-block form, each block
/// folded on its own.
template <symmetric_scale Scale>
typename Scale::value_type sugeno_symmetric_explicit(const capacity<Scale>& v,
                                                     std::span<const typename Scale::value_type> f) {
  using value = typename Scale::value_type;
  const auto terms = sorted_terms(v, f);
  return sym_max(fold_sym_max(std::span<const value>(terms.negative_block), aggregation_rule::floor),
                 fold_sym_max(std::span<const value>(terms.positive_block), aggregation_rule::floor));
}

namespace detail {

// m(A) symmin [min_A f+  symmax  -min_A f-], A nonempty.
template <symmetric_scale Scale>
typename Scale::value_type mobius_term(const set_function<Scale>& m, std::span<const typename Scale::value_type> f,
                                       player_set A) {
  auto low_plus = one(m.scale());
  auto low_minus = one(m.scale());
  for (int i : A.players()) {
    low_plus = std::min(low_plus, positive_part(f[i - 1]));
    low_minus = std::min(low_minus, negative_part(f[i - 1]));
  }
  return sym_min(m[A], sym_max(low_plus, -low_minus));
}

template <symmetric_scale Scale>
void check_mobius_profile(const set_function<Scale>& m, std::span<const typename Scale::value_type> f) {
  if (static_cast<int>(f.size()) != m.players())
    throw std::invalid_argument("profile length does not match the number of players");
  for (const auto& x : f)
    if (!on_scale(m.scale(), x)) throw std::invalid_argument("profile value is not on the scale");
}

}  // namespace detail

/// Terms of the Moebius form split by where A sits: inside N+ = {f >= 0},
/// inside N- = {f < 0}, or meeting both. The empty set contributes nothing.
template <symmetric_scale Scale>
struct three_block_terms {
  std::vector<typename Scale::value_type> nonnegative_block;
  std::vector<typename Scale::value_type> negative_block;
  std::vector<typename Scale::value_type> mixed_block;
};

template <symmetric_scale Scale>
three_block_terms<Scale> mobius_terms(const set_function<Scale>& m, std::span<const typename Scale::value_type> f) {
  detail::check_mobius_profile(m, f);
  player_set nonneg;
  for (int i = 1; i <= m.players(); ++i)
    if (f[i - 1].is_nonnegative()) nonneg = nonneg.with(i);
  const player_set neg = nonneg.complement(m.players());

  three_block_terms<Scale> out;
  for_each_set(m.players(), [&](player_set A) {
    if (A.empty()) return;
    auto term = detail::mobius_term(m, f, A);
    if (A.subset_of(nonneg))
      out.nonnegative_block.push_back(term);
    else if (A.subset_of(neg))
      out.negative_block.push_back(term);
    else
      out.mixed_block.push_back(term);
  });
  return out;
}

/// The symmetric integral through its Moebius form: the three block folds
/// joined with the symmetric maximum. m must lie in the Moebius interval of
/// the capacity.
template <symmetric_scale Scale>
typename Scale::value_type sugeno_symmetric_mobius(const set_function<Scale>& m,
                                                   std::span<const typename Scale::value_type> f) {
  using value = typename Scale::value_type;
  const auto terms = mobius_terms(m, f);
  const value blocks[] = {
      fold_sym_max(std::span<const value>(terms.nonnegative_block), aggregation_rule::floor),
      fold_sym_max(std::span<const value>(terms.negative_block), aggregation_rule::floor),
      fold_sym_max(std::span<const value>(terms.mixed_block), aggregation_rule::floor),
  };
  return fold_sym_max(std::span<const value>(blocks), aggregation_rule::floor);
}

/// All Moebius-form terms in one sequence, A nonempty in index order.
template <symmetric_scale Scale>
std::vector<typename Scale::value_type> variant1_terms(const set_function<Scale>& m,
                                                       std::span<const typename Scale::value_type> f) {
  detail::check_mobius_profile(m, f);
  std::vector<typename Scale::value_type> out;
  for_each_set(m.players(), [&](player_set A) {
    if (!A.empty()) out.push_back(detail::mobius_term(m, f, A));
  });
  return out;
}

/// First variant: every Moebius-form term folded together under angle.
template <symmetric_scale Scale>
typename Scale::value_type sugeno_variant1(const set_function<Scale>& m, std::span<const typename Scale::value_type> f) {
  using value = typename Scale::value_type;
  const auto terms = variant1_terms(m, f);
  return fold_sym_max(std::span<const value>(terms), aggregation_rule::angle);
}

template <symmetric_scale Scale>
typename Scale::value_type sugeno_variant1(const capacity<Scale>& v, std::span<const typename Scale::value_type> f,
                                           mobius_representative which = mobius_representative::lower) {
  detail::check_profile(v, f);
  auto interval = ordinal_mobius_interval(v);
  return sugeno_variant1(which == mobius_representative::lower ? interval.lower : interval.upper, f);
}

/// Second variant: every two-block term folded together under angle.
template <symmetric_scale Scale>
typename Scale::value_type sugeno_variant2(const capacity<Scale>& v, std::span<const typename Scale::value_type> f) {
  using value = typename Scale::value_type;
  const auto terms = sorted_terms(v, f).all();
  return fold_sym_max(std::span<const value>(terms), aggregation_rule::angle);
}

/// Third variant: every two-block term folded together under ceil.
template <symmetric_scale Scale>
typename Scale::value_type sugeno_variant3(const capacity<Scale>& v, std::span<const typename Scale::value_type> f) {
  using value = typename Scale::value_type;
  const auto terms = sorted_terms(v, f).all();
  return fold_sym_max(std::span<const value>(terms), aggregation_rule::ceil);
}

}  // namespace symord
