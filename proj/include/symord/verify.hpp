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

/// \file symord/verify.hpp
///
/// Executable law suites.
///
/// Every algebraic law of the library is a named check run over an instance
/// family: either every capacity and profile on n <= 3 players over a levels
/// scale, or a seeded random sample. A check stops at its first failure and
/// reports the counterexample. Laws that are known to fail carry a pinned
/// witness and report "expected-fail" when the witness still fails.
///
/// Nothing here is needed to compute integrals; it exists so that the laws
/// can be re-run from the command line and from the acceptance suite.

#pragma once

#include "symord/capacity.hpp"
#include "symord/choquet.hpp"
#include "symord/mobius.hpp"
#include "symord/rules.hpp"
#include "symord/scale.hpp"
#include "symord/sugeno.hpp"
#include "symord/text_format.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace symord::verify {

enum class status { pass, fail, expected_fail, report, skipped };

inline std::string_view to_string(status s) {
  switch (s) {
    case status::pass: return "pass";
    case status::fail: return "fail";
    case status::expected_fail: return "expected-fail";
    case status::report: return "report";
    case status::skipped: return "skipped";
  }
  return "?";
}

struct law_result {
  status state = status::pass;
  std::size_t checked = 0;
  std::string detail;

  bool ok() const noexcept { return state != status::fail; }
};

struct config {
  int players = 2;
  int levels = 3;
  bool exhaustive = true;
  std::size_t samples = 10000;
  std::uint64_t seed = 42;
  /// Random families on the unit scale instead of Levels(levels).
  bool unit = false;
};

using rng_type = std::mt19937_64;

// ---------------------------------------------------------------------------
// Printing helpers for counterexamples

inline std::string text(const scale_value<level>& a) {
  return a.is_negative() ? "-" + std::to_string(a.magnitude().index) : std::to_string(a.magnitude().index);
}

inline std::string text(const scale_value<rational>& a) { return unit_codec{}.format(a); }

template <magnitude M>
std::string text(std::span<const scale_value<M>> values) {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + text(values[i]);
  return out + ")";
}

template <magnitude M>
std::string text(const std::vector<scale_value<M>>& values) {
  return text(std::span<const scale_value<M>>(values));
}

template <symmetric_scale S>
std::string text(const set_function<S>& g) {
  subset_codec names(g.players() == 0 ? 1 : g.players());
  std::string out = "{";
  bool first = true;
  for (player_set A : display_order(g.players())) {
    out += (first ? "" : ", ") + names.format(A) + ":" + text(g[A]);
    first = false;
  }
  return out + "}";
}

template <symmetric_scale S>
std::string text(const capacity<S>& v) {
  return text(v.table());
}

// ---------------------------------------------------------------------------
// Instance generation

/// Every value of L on Levels(K), ascending: -K..K.
inline std::vector<scale_value<level>> all_values(const levels_scale& scale) {
  std::vector<scale_value<level>> out;
  for (int i = -scale.top_index(); i <= scale.top_index(); ++i) out.push_back(scale.at(i));
  return out;
}

/// Every value of L+ on Levels(K), ascending.
inline std::vector<scale_value<level>> all_magnitudes(const levels_scale& scale) {
  std::vector<scale_value<level>> out;
  for (int i = 0; i <= scale.top_index(); ++i) out.push_back(scale.at(i));
  return out;
}

/// Every capacity on n players over Levels(K).
inline std::vector<capacity<levels_scale>> all_capacities(const levels_scale& scale, int n) {
  using value = scale_value<level>;
  std::vector<capacity<levels_scale>> out;
  set_function<levels_scale> table(scale, n);
  const std::size_t count = table_size(n);
  const auto top = one(scale);
  std::function<void(std::size_t)> fill = [&](std::size_t index) {
    if (index + 1 == count) {
      table[player_set(static_cast<std::uint32_t>(index))] = top;
      for (int i = 1; i <= n; ++i)
        if (table[player_set::full(n).without(i)] > top) return;
      out.emplace_back(table);
      return;
    }
    player_set A(static_cast<std::uint32_t>(index));
    value floor_value;
    for (int i : A.players()) floor_value = std::max(floor_value, table[A.without(i)]);
    for (int k = floor_value.magnitude().index; k <= scale.top_index(); ++k) {
      table[A] = value::positive({k});
      fill(index + 1);
    }
  };
  if (n == 0) return out;
  table[player_set{}] = value{};
  fill(1);
  return out;
}

/// Every profile in L^n over Levels(K).
inline std::vector<profile<levels_scale>> all_profiles(const levels_scale& scale, int n, bool nonnegative_only = false) {
  const auto values = nonnegative_only ? all_magnitudes(scale) : all_values(scale);
  std::vector<profile<levels_scale>> out;
  profile<levels_scale> f(static_cast<std::size_t>(n));
  std::function<void(int)> fill = [&](int i) {
    if (i == n) {
      out.push_back(f);
      return;
    }
    for (const auto& a : values) {
      f[static_cast<std::size_t>(i)] = a;
      fill(i + 1);
    }
  };
  fill(0);
  return out;
}

inline scale_value<level> random_magnitude(const levels_scale& scale, rng_type& rng) {
  std::uniform_int_distribution<int> pick(0, scale.top_index());
  return scale_value<level>::positive({pick(rng)});
}

/// Random magnitude k/d, d drawn from 1..12.
inline scale_value<rational> random_magnitude(const unit_scale&, rng_type& rng) {
  std::uniform_int_distribution<int> den(1, 12);
  int d = den(rng);
  std::uniform_int_distribution<int> num(0, d);
  return scale_value<rational>::positive(rational(num(rng), d));
}

template <symmetric_scale S>
typename S::value_type random_value(const S& scale, rng_type& rng) {
  auto m = random_magnitude(scale, rng);
  std::bernoulli_distribution flip(0.5);
  return flip(rng) ? -m : m;
}

/// Random capacity: independent draws closed upward under the monotone
/// envelope, v(N) forced to the top.
template <symmetric_scale S>
capacity<S> random_capacity(const S& scale, int n, rng_type& rng) {
  set_function<S> table(scale, n);
  const player_set full = player_set::full(n);
  for_each_set(n, [&](player_set A) {
    if (A.empty()) return;
    if (A == full) {
      table[A] = one(scale);
      return;
    }
    auto a = random_magnitude(scale, rng);
    for (int i : A.players()) a = std::max(a, table[A.without(i)]);
    table[A] = a;
  });
  return capacity<S>(std::move(table));
}

template <symmetric_scale S>
profile<S> random_profile(const S& scale, int n, rng_type& rng, bool nonnegative_only = false) {
  profile<S> f;
  for (int i = 0; i < n; ++i) f.push_back(nonnegative_only ? random_magnitude(scale, rng) : random_value(scale, rng));
  return f;
}

/// Grid for brute-force Moebius enumeration: all levels.
inline std::vector<scale_value<level>> mobius_grid(const capacity<levels_scale>& v) {
  return all_magnitudes(v.scale());
}

/// Grid for brute-force Moebius enumeration on the unit scale: the values of
/// v together with 0 and 1. Folds of nonnegative m only produce values from
/// m's range, so no other value can be part of a solution.
inline std::vector<scale_value<rational>> mobius_grid(const capacity<unit_scale>& v) {
  std::vector<scale_value<rational>> out(v.table().values().begin(), v.table().values().end());
  out.push_back({});
  out.push_back(one(v.scale()));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Profiles one step above f in a single coordinate.
inline std::vector<profile<levels_scale>> raised_profiles(const levels_scale& scale, const profile<levels_scale>& f) {
  std::vector<profile<levels_scale>> out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto& a = f[i];
    int index = a.is_negative() ? -a.magnitude().index : a.magnitude().index;
    if (index == scale.top_index()) continue;
    auto g = f;
    g[i] = scale.at(index + 1);
    out.push_back(std::move(g));
  }
  return out;
}

/// Profiles above f in one coordinate: raised halfway to 1 and raised to 1.
inline std::vector<profile<unit_scale>> raised_profiles(const unit_scale& scale, const profile<unit_scale>& f) {
  std::vector<profile<unit_scale>> out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto& a = f[i];
    rational x = a.is_negative() ? rational(-a.magnitude()) : a.magnitude();
    if (x == 1) continue;
    for (const rational& y : {rational((x + 1) / 2), rational(1)}) {
      auto g = f;
      g[i] = scale.at(y);
      out.push_back(std::move(g));
    }
  }
  return out;
}

/// Capacities paired with profiles. Exhaustive families share one profile
/// list; random families draw profiles per capacity.
template <symmetric_scale S>
struct family {
  S scale;
  int players = 0;
  std::vector<capacity<S>> capacities;
  std::vector<profile<S>> shared_profiles;
  std::vector<std::vector<profile<S>>> own_profiles;

  std::span<const profile<S>> profiles_of(std::size_t k) const {
    return own_profiles.empty() ? std::span<const profile<S>>(shared_profiles) : std::span<const profile<S>>(own_profiles[k]);
  }

  std::string describe() const {
    std::ostringstream out;
    out << capacities.size() << " capacities on n=" << players;
    return out.str();
  }
};

inline family<levels_scale> exhaustive_family(int n, int k, bool nonnegative_only = false) {
  levels_scale scale(k);
  return {scale, n, all_capacities(scale, n), all_profiles(scale, n, nonnegative_only), {}};
}

template <symmetric_scale S>
family<S> random_family(const S& scale, int n, std::size_t count, std::uint64_t seed, std::size_t profiles_each = 4,
                        bool nonnegative_only = false) {
  rng_type rng(seed);
  family<S> out{scale, n, {}, {}, {}};
  for (std::size_t c = 0; c < count; ++c) {
    out.capacities.push_back(random_capacity(scale, n, rng));
    std::vector<profile<S>> fs;
    for (std::size_t j = 0; j < profiles_each; ++j) fs.push_back(random_profile(scale, n, rng, nonnegative_only));
    out.own_profiles.push_back(std::move(fs));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Brute-force enumeration of nonnegative ordinal Moebius solutions.
//
// Walks subsets in index order (subsets before supersets) and tries every
// grid value at each one. A branch is abandoned as soon as the join over
// the subsets of the current set, all of which are assigned by then, misses
// v at that set. No interval formula is used.

template <symmetric_scale S>
std::vector<set_function<S>> brute_force_solutions(const capacity<S>& v, std::span<const typename S::value_type> grid) {
  std::vector<set_function<S>> out;
  set_function<S> m(v.scale(), v.players());
  const std::size_t count = table_size(v.players());
  std::function<void(std::size_t)> walk = [&](std::size_t index) {
    if (index == count) {
      out.push_back(m);
      return;
    }
    player_set A(static_cast<std::uint32_t>(index));
    typename S::value_type below;
    for_each_subset(A, [&](player_set B) {
      if (B != A) below = std::max(below, m[B]);
    });
    for (const auto& candidate : grid) {
      if (std::max(below, candidate) != v[A]) continue;
      m[A] = candidate;
      walk(index + 1);
    }
  };
  walk(0);
  return out;
}

/// Every grid-valued m with lower <= m <= upper pointwise.
template <symmetric_scale S>
std::vector<set_function<S>> interval_members(const mobius_interval<S>& interval,
                                              std::span<const typename S::value_type> grid) {
  std::vector<set_function<S>> out;
  set_function<S> m = interval.lower;
  const std::size_t count = interval.lower.size();
  std::function<void(std::size_t)> walk = [&](std::size_t index) {
    if (index == count) {
      out.push_back(m);
      return;
    }
    player_set A(static_cast<std::uint32_t>(index));
    for (const auto& candidate : grid) {
      if (candidate < interval.lower[A] || candidate > interval.upper[A]) continue;
      m[A] = candidate;
      walk(index + 1);
    }
  };
  walk(0);
  return out;
}

template <symmetric_scale S>
bool within(const set_function<S>& m, const mobius_interval<S>& interval) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    player_set A(static_cast<std::uint32_t>(i));
    if (m[A] < interval.lower[A] || m[A] > interval.upper[A]) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Scale laws (exhaustive on Levels(K))

namespace detail {

using lvalue = scale_value<level>;

/// Every value reachable by some ordering and some bracketing of `values`.
inline std::set<lvalue> all_bracketings(std::vector<lvalue> values) {
  std::set<lvalue> out;
  std::function<std::set<lvalue>(std::span<const lvalue>)> brackets = [&](std::span<const lvalue> seq) {
    std::set<lvalue> results;
    if (seq.size() == 1) return std::set<lvalue>{seq[0]};
    for (std::size_t cut = 1; cut < seq.size(); ++cut)
      for (const auto& left : brackets(seq.subspan(0, cut)))
        for (const auto& right : brackets(seq.subspan(cut))) results.insert(sym_max(left, right));
    return results;
  };
  std::sort(values.begin(), values.end());
  do {
    auto r = brackets(values);
    out.insert(r.begin(), r.end());
  } while (std::next_permutation(values.begin(), values.end()));
  return out;
}

}  // namespace detail

inline law_result law_involution(int k) {
  law_result r;
  for (const auto& a : all_values(levels_scale(k))) {
    ++r.checked;
    if (reflect(reflect(a)) != a || abs_val(a) != abs_val(reflect(a)) || abs_val(a).is_negative())
      return {status::fail, r.checked, "a=" + text(a)};
  }
  return r;
}

inline law_result law_de_morgan(int k) {
  law_result r;
  const auto values = all_values(levels_scale(k));
  for (const auto& a : values)
    for (const auto& b : values) {
      ++r.checked;
      if (lattice_max(-a, -b) != -lattice_min(a, b) || lattice_min(-a, -b) != -lattice_max(a, b))
        return {status::fail, r.checked, "a=" + text(a) + " b=" + text(b)};
    }
  return r;
}

/// sym_max(a,b) = sign(a+b)(|a| v |b|), sym_min(a,b) = sign(ab)(|a| ^ |b|),
/// with +, * and sign taken in exact rational arithmetic.
inline law_result law_marichal(const std::vector<scale_value<rational>>& values) {
  law_result r;
  auto as_number = [](const scale_value<rational>& a) {
    return a.is_negative() ? rational(-a.magnitude()) : a.magnitude();
  };
  auto signed_mag = [](const rational& s, const rational& m) {
    if (s == 0 || m == 0) return scale_value<rational>{};
    return s < 0 ? scale_value<rational>::negative(m) : scale_value<rational>::positive(m);
  };
  for (const auto& a : values)
    for (const auto& b : values) {
      ++r.checked;
      const rational x = as_number(a);
      const rational y = as_number(b);
      const rational big = std::max(a.magnitude(), b.magnitude());
      const rational small = std::min(a.magnitude(), b.magnitude());
      if (sym_max(a, b) != signed_mag(x + y, big) || sym_min(a, b) != signed_mag(x * y, small))
        return {status::fail, r.checked, "a=" + text(a) + " b=" + text(b)};
    }
  return r;
}

inline std::vector<scale_value<rational>> unit_grid(int k) {
  std::vector<scale_value<rational>> out;
  unit_scale scale;
  for (int i = -k; i <= k; ++i) out.push_back(scale.at(rational(i, k)));
  return out;
}

/// (i) and (vi).
inline law_result law_commutative(int k) {
  law_result r;
  const auto values = all_values(levels_scale(k));
  for (const auto& a : values)
    for (const auto& b : values) {
      ++r.checked;
      if (sym_max(a, b) != sym_max(b, a) || sym_min(a, b) != sym_min(b, a))
        return {status::fail, r.checked, "a=" + text(a) + " b=" + text(b)};
    }
  return r;
}

/// (ii) and (vii), checked over every candidate element. Absorbance of 1
/// under sym_max is checked on L \ {-1}: 1 symmax -1 = 0 by (iii).
inline law_result law_neutral_absorbant(int k) {
  law_result r;
  const levels_scale scale(k);
  const auto values = all_values(scale);
  const auto top = one(scale);
  for (const auto& e : values) {
    bool max_neutral = true, min_absorbant = true, min_neutral = true, max_absorbant = true;
    for (const auto& a : values) {
      ++r.checked;
      max_neutral = max_neutral && sym_max(e, a) == a && sym_max(a, e) == a;
      min_absorbant = min_absorbant && sym_min(e, a) == e && sym_min(a, e) == e;
      min_neutral = min_neutral && sym_min(e, a) == a && sym_min(a, e) == a;
      if (a != -top) max_absorbant = max_absorbant && sym_max(e, a) == e && sym_max(a, e) == e;
    }
    const bool is_zero = e.is_zero();
    const bool is_top = e == top;
    if (max_neutral != is_zero) return {status::fail, r.checked, "neutral of symmax: e=" + text(e)};
    if (min_absorbant != is_zero) return {status::fail, r.checked, "absorbant of symmin: e=" + text(e)};
    if (min_neutral != is_top) return {status::fail, r.checked, "neutral of symmin: e=" + text(e)};
    if (max_absorbant != is_top) return {status::fail, r.checked, "absorbant of symmax: e=" + text(e)};
  }
  return r;
}

/// (iii) and (iv).
inline law_result law_inverse_and_reflection(int k) {
  law_result r;
  const auto values = all_values(levels_scale(k));
  for (const auto& a : values) {
    ++r.checked;
    if (!sym_max(a, -a).is_zero()) return {status::fail, r.checked, "a symmax -a != 0 for a=" + text(a)};
    for (const auto& b : values) {
      ++r.checked;
      if (-sym_max(a, b) != sym_max(-a, -b)) return {status::fail, r.checked, "a=" + text(a) + " b=" + text(b)};
    }
  }
  return r;
}

/// (v): every ordering and bracketing of triples (and of quadruples when
/// K <= 3) agrees when max != -min; at least one triple with max = -min
/// disagrees.
inline law_result law_conditional_associativity(int k) {
  using detail::lvalue;
  law_result r;
  const auto values = all_values(levels_scale(k));
  std::optional<std::vector<lvalue>> witness;
  auto check = [&](const std::vector<lvalue>& seq) -> bool {
    ++r.checked;
    const auto results = detail::all_bracketings(seq);
    const bool condition = is_fold_unambiguous(std::span<const lvalue>(seq));
    if (condition && results.size() != 1) return false;
    if (!condition && results.size() > 1 && !witness) witness = seq;
    return true;
  };
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = i; j < values.size(); ++j)
      for (std::size_t l = j; l < values.size(); ++l) {
        std::vector<lvalue> seq{values[i], values[j], values[l]};
        if (!check(seq)) return {status::fail, r.checked, "triple " + text(seq) + " brackets differently"};
        if (k > 3) continue;
        for (std::size_t q = l; q < values.size(); ++q) {
          std::vector<lvalue> quad{values[i], values[j], values[l], values[q]};
          if (!check(quad)) return {status::fail, r.checked, "quadruple " + text(quad) + " brackets differently"};
        }
      }
  if (!witness) return {status::fail, r.checked, "no non-associative triple with max = -min found"};
  r.detail = "non-associativity witness " + text(*witness);
  return r;
}

/// (viii).
inline law_result law_symmin_associative(int k) {
  law_result r;
  const auto values = all_values(levels_scale(k));
  for (const auto& a : values)
    for (const auto& b : values)
      for (const auto& c : values) {
        ++r.checked;
        if (sym_min(sym_min(a, b), c) != sym_min(a, sym_min(b, c)))
          return {status::fail, r.checked, "a=" + text(a) + " b=" + text(b) + " c=" + text(c)};
      }
  return r;
}

/// (ix): a symmin (b symmax c) = (a symmin b) symmax (a symmin c) with all
/// operands in L+, and with all operands in L-.
inline law_result law_distributive(int k) {
  law_result r;
  const levels_scale scale(k);
  for (int side : {1, -1}) {
    std::vector<scale_value<level>> values;
    for (int i = 0; i <= k; ++i) values.push_back(scale.at(side * i));
    for (const auto& a : values)
      for (const auto& b : values)
        for (const auto& c : values) {
          ++r.checked;
          if (sym_min(a, sym_max(b, c)) != sym_max(sym_min(a, b), sym_min(a, c)))
            return {status::fail, r.checked, "a=" + text(a) + " b=" + text(b) + " c=" + text(c)};
        }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Rule laws

/// Sorted sequences (multisets) of length 0..max_size over `values`.
inline std::vector<std::vector<scale_value<level>>> all_multisets(const std::vector<scale_value<level>>& values,
                                                                  std::size_t max_size) {
  std::vector<std::vector<scale_value<level>>> out;
  std::vector<scale_value<level>> current;
  std::function<void(std::size_t)> grow = [&](std::size_t from) {
    out.push_back(current);
    if (current.size() == max_size) return;
    for (std::size_t i = from; i < values.size(); ++i) {
      current.push_back(values[i]);
      grow(i);
      current.pop_back();
    }
  };
  grow(0);
  return out;
}

inline law_result law_rules_agreement(int k, std::size_t max_size = 5) {
  using value = scale_value<level>;
  law_result r;
  for (const auto& seq : all_multisets(all_values(levels_scale(k)), max_size)) {
    std::span<const value> s(seq);
    if (!is_fold_unambiguous(s)) continue;
    ++r.checked;
    const value plain = left_fold_sym_max(s);
    for (auto rule : all_rules)
      if (fold_sym_max(s, rule) != plain)
        return {status::fail, r.checked, std::string(to_string(rule)) + " on " + text(seq)};
  }
  return r;
}

inline law_result law_rules_symmetry(int k, std::size_t max_size = 5) {
  using value = scale_value<level>;
  law_result r;
  for (const auto& seq : all_multisets(all_values(levels_scale(k)), max_size)) {
    std::vector<value> reflected;
    for (const auto& a : seq) reflected.push_back(-a);
    for (auto rule : all_rules) {
      ++r.checked;
      if (fold_sym_max(std::span<const value>(reflected), rule) != -fold_sym_max(std::span<const value>(seq), rule))
        return {status::fail, r.checked, std::string(to_string(rule)) + " on " + text(seq)};
    }
  }
  return r;
}

inline law_result law_rules_singleton(int k) {
  law_result r;
  for (const auto& a : all_values(levels_scale(k)))
    for (auto rule : all_rules) {
      ++r.checked;
      if (fold_sym_max({a}, rule) != a) return {status::fail, r.checked, std::string(to_string(rule)) + " on " + text(a)};
    }
  return r;
}

/// Pairs a <= b of sorted equal-length sequences; fold(a) <= fold(b).
inline std::optional<std::pair<std::vector<scale_value<level>>, std::vector<scale_value<level>>>> find_rule_violation(
    int k, std::size_t max_size, aggregation_rule rule, std::size_t* checked) {
  using value = scale_value<level>;
  const auto multisets = all_multisets(all_values(levels_scale(k)), max_size);
  for (const auto& a : multisets)
    for (const auto& b : multisets) {
      if (a.size() != b.size()) continue;
      bool below = true;
      for (std::size_t i = 0; i < a.size() && below; ++i) below = a[i] <= b[i];
      if (!below) continue;
      if (checked) ++*checked;
      if (fold_sym_max(std::span<const value>(a), rule) > fold_sym_max(std::span<const value>(b), rule))
        return std::make_pair(a, b);
    }
  return std::nullopt;
}

inline law_result law_rules_monotone(int k, std::size_t max_size = 4) {
  law_result r;
  for (auto rule : {aggregation_rule::floor, aggregation_rule::ceil}) {
    if (auto bad = find_rule_violation(k, max_size, rule, &r.checked))
      return {status::fail, r.checked,
              std::string(to_string(rule)) + ": " + text(bad->first) + " <= " + text(bad->second)};
  }
  return r;
}

/// The angle rule is not monotone. The pinned pair a <= b folds to 2 and -4.
inline law_result law_angle_monotonic(int k, std::size_t max_size = 4) {
  using value = scale_value<level>;
  law_result r;
  const levels_scale five(5);
  std::vector<value> a, b;
  for (int x : {-5, -5, -1, 2, 5}) a.push_back(five.at(x));
  for (int x : {-5, -4, -1, 2, 5}) b.push_back(five.at(x));
  ++r.checked;
  const auto fa = fold_sym_max(std::span<const value>(a), aggregation_rule::angle);
  const auto fb = fold_sym_max(std::span<const value>(b), aggregation_rule::angle);
  if (!(fa == five.at(2) && fb == five.at(-4)))
    return {status::fail, r.checked, "pinned witness no longer folds to 2 and -4"};
  r.state = status::expected_fail;
  r.detail = "pinned witness " + text(a) + " <= " + text(b) + " folds to " + text(fa) + " > " + text(fb);
  if (auto found = find_rule_violation(k, max_size, aggregation_rule::angle, &r.checked))
    r.detail += "; smallest search hit on Levels(" + std::to_string(k) + "): " + text(found->first) + " <= " +
                text(found->second);
  return r;
}

// ---------------------------------------------------------------------------
// Capacity and Moebius laws over a family

template <symmetric_scale S>
law_result law_conjugate_involution(const family<S>& fam) {
  law_result r;
  for (const auto& v : fam.capacities) {
    ++r.checked;
    if (conjugate(conjugate(v)) != v) return {status::fail, r.checked, "v=" + text(v)};
  }
  return r;
}

/// Possibility measures are maxitive and 1-maxitive; their conjugates are
/// valid necessity measures; every unanimity game is a valid capacity.
template <symmetric_scale S>
law_result law_named_capacities(const S& scale, int n, std::size_t samples, std::uint64_t seed) {
  law_result r;
  rng_type rng(seed);
  try {
    for (int b = 0; b < (1 << n); ++b) {
      ++r.checked;
      auto u = unanimity(scale, n, player_set(static_cast<std::uint32_t>(b)));
      if (!validate(u.table()).empty()) return {status::fail, r.checked, "unanimity " + text(u)};
    }
    std::uniform_int_distribution<int> who(0, n - 1);
    for (std::size_t s = 0; s < samples; ++s) {
      ++r.checked;
      auto pi = random_profile(scale, n, rng, true);
      pi[static_cast<std::size_t>(who(rng))] = one(scale);
      auto possibility = possibility_from(scale, std::span(std::as_const(pi)));
      auto necessity = necessity_from(scale, std::span(std::as_const(pi)));
      if (!is_maxitive(possibility) || !is_k_maxitive(possibility, 1))
        return {status::fail, r.checked, "possibility not maxitive: pi=" + text(pi)};
      if (!validate(necessity.table()).empty()) return {status::fail, r.checked, "necessity invalid: pi=" + text(pi)};
    }
  } catch (const std::exception& e) {
    return {status::fail, r.checked, e.what()};
  }
  return r;
}

inline law_result law_classical_roundtrip(int max_players, std::size_t samples, std::uint64_t seed) {
  law_result r;
  rng_type rng(seed);
  std::uniform_int_distribution<int> num(-20, 20);
  std::uniform_int_distribution<int> den(1, 9);
  for (std::size_t s = 0; s < samples; ++s) {
    const int n = 1 + static_cast<int>(s % static_cast<std::size_t>(max_players));
    real_set_function v(n);
    for_each_set(n, [&](player_set A) { v[A] = rational(num(rng), den(rng)); });
    ++r.checked;
    if (classical_zeta(classical_mobius(v)) != v || classical_mobius(classical_zeta(v)) != v)
      return {status::fail, r.checked, "roundtrip failed at n=" + std::to_string(n)};
  }
  return r;
}

/// Every grid m inside [lower, upper] solves v under floor, and every
/// brute-force nonnegative solution lies inside the interval.
template <symmetric_scale S>
law_result law_mobius_interval(const family<S>& fam) {
  law_result r;
  for (const auto& v : fam.capacities) {
    const auto interval = ordinal_mobius_interval(v);
    const auto grid = mobius_grid(v);
    for (const auto& m : interval_members(interval, std::span(grid))) {
      ++r.checked;
      if (!is_solution(m, v, aggregation_rule::floor))
        return {status::fail, r.checked, "interval member is not a solution: v=" + text(v) + " m=" + text(m)};
    }
    for (const auto& m : brute_force_solutions(v, std::span(grid))) {
      ++r.checked;
      if (!within(m, interval))
        return {status::fail, r.checked, "solution outside the interval: v=" + text(v) + " m=" + text(m)};
    }
  }
  return r;
}

template <symmetric_scale S>
law_result law_even_odd_lower(const family<S>& fam) {
  law_result r;
  for (const auto& v : fam.capacities) {
    ++r.checked;
    if (even_odd_mobius(v) != ordinal_mobius_interval(v).lower) return {status::fail, r.checked, "v=" + text(v)};
  }
  return r;
}

template <symmetric_scale S>
law_result law_canonical_lower(const family<S>& fam) {
  law_result r;
  for (const auto& v : fam.capacities) {
    const auto lower = ordinal_mobius_interval(v).lower;
    for (auto rule : {aggregation_rule::floor, aggregation_rule::angle}) {
      ++r.checked;
      if (canonical_ordinal_mobius(v.table(), rule) != lower)
        return {status::fail, r.checked, std::string(to_string(rule)) + ": v=" + text(v)};
    }
  }
  return r;
}

/// v(A) = max_B ([m](B) min u_B(A)) for every grid m in the interval.
template <symmetric_scale S>
law_result law_reconstruction(const family<S>& fam) {
  law_result r;
  for (const auto& v : fam.capacities) {
    const auto grid = mobius_grid(v);
    for (const auto& m : interval_members(ordinal_mobius_interval(v), std::span(grid))) {
      bool ok = true;
      for_each_set(v.players(), [&](player_set A) {
        ++r.checked;
        ok = ok && reconstruct(m, A) == v[A];
      });
      if (!ok) return {status::fail, r.checked, "v=" + text(v) + " m=" + text(m)};
    }
  }
  return r;
}

template <symmetric_scale S>
law_result law_conjugate_reconstruction(const family<S>& fam) {
  law_result r;
  for (const auto& v : fam.capacities) {
    bool ok = true;
    for_each_set(v.players(), [&](player_set A) {
      ++r.checked;
      ok = ok && conjugate_reconstruct(v, A) == v[A];
    });
    if (!ok) return {status::fail, r.checked, "v=" + text(v)};
  }
  return r;
}

/// Closed-form Moebius transforms of possibility and necessity measures:
/// supported on singletons and on a chain of tail sets, equal to the lower
/// bound, and floor solutions.
template <symmetric_scale S>
law_result law_focal_structure(const S& scale, int n, std::size_t samples, std::uint64_t seed) {
  law_result r;
  rng_type rng(seed);
  std::uniform_int_distribution<int> who(0, n - 1);
  for (std::size_t s = 0; s < samples; ++s) {
    ++r.checked;
    auto pi = random_profile(scale, n, rng, true);
    pi[static_cast<std::size_t>(who(rng))] = one(scale);
    std::span<const typename S::value_type> dist(pi);
    const auto possibility = possibility_from(scale, dist);
    const auto necessity = necessity_from(scale, dist);
    const auto mp = mobius_possibility(scale, dist);
    const auto mn = mobius_necessity(scale, dist);
    bool singletons = true;
    std::vector<player_set> focal;
    for_each_set(n, [&](player_set A) {
      if (A.size() != 1 && !mp[A].is_zero()) singletons = false;
      if (!mn[A].is_zero()) focal.push_back(A);
    });
    bool chain = true;
    for (std::size_t i = 0; i < focal.size(); ++i)
      for (std::size_t j = 0; j < focal.size(); ++j)
        chain = chain && (focal[i].subset_of(focal[j]) || focal[j].subset_of(focal[i]));
    if (!singletons || !chain) return {status::fail, r.checked, "focal structure broken: pi=" + text(pi)};
    if (mp != ordinal_mobius_interval(possibility).lower || mn != ordinal_mobius_interval(necessity).lower)
      return {status::fail, r.checked, "closed form differs from the lower bound: pi=" + text(pi)};
    if (!is_solution(mp, possibility, aggregation_rule::floor) || !is_solution(mn, necessity, aggregation_rule::floor))
      return {status::fail, r.checked, "closed form is not a solution: pi=" + text(pi)};
  }
  return r;
}

/// g1 symmax g2 = g2 pointwise, but the lower transforms do not join to
/// the lower transform of g2.
inline law_result law_mobius_nonlinear() {
  law_result r;
  const levels_scale scale(1);
  const auto O = scale.at(0);
  const auto I = scale.at(1);
  set_function<levels_scale> g1(scale, 2, {O, O, O, I});
  set_function<levels_scale> g2(scale, 2, {O, I, I, I});
  const auto m1 = ordinal_mobius_interval(capacity<levels_scale>(g1)).lower;
  const auto m2 = ordinal_mobius_interval(capacity<levels_scale>(g2)).lower;
  bool joins_to_g2 = true;
  bool mobius_joins_to_m2 = true;
  for_each_set(2, [&](player_set A) {
    ++r.checked;
    joins_to_g2 = joins_to_g2 && sym_max(g1[A], g2[A]) == g2[A];
    mobius_joins_to_m2 = mobius_joins_to_m2 && sym_max(m1[A], m2[A]) == m2[A];
  });
  if (!joins_to_g2 || mobius_joins_to_m2)
    return {status::fail, r.checked, "m1=" + text(m1) + " m2=" + text(m2)};
  r.detail = "m_lower[g1]=" + text(m1) + " m_lower[g2]=" + text(m2);
  return r;
}

// ---------------------------------------------------------------------------
// Integral laws over a family

/// For f >= 0, sugeno_mobius(m, f) is the same for every grid m in the
/// interval and equals sugeno(v, f).
template <symmetric_scale S>
law_result law_mobius_representative(const family<S>& fam) {
  using value = typename S::value_type;
  law_result r;
  for (std::size_t k = 0; k < fam.capacities.size(); ++k) {
    const auto& v = fam.capacities[k];
    const auto grid = mobius_grid(v);
    const auto members = interval_members(ordinal_mobius_interval(v), std::span(grid));
    for (const auto& raw : fam.profiles_of(k)) {
      const auto f = positive_part(std::span<const value>(raw));
      const auto expected = sugeno(v, std::span<const value>(f));
      for (const auto& m : members) {
        ++r.checked;
        if (sugeno_mobius(m, std::span<const value>(f)) != expected)
          return {status::fail, r.checked, "v=" + text(v) + " m=" + text(m) + " f=" + text(f)};
      }
    }
  }
  return r;
}

/// definition = sorted two-block form = Moebius form for every grid m in
/// the interval; the mixed Moebius block is identically zero.
template <symmetric_scale S>
law_result law_symmetric_equivalence(const family<S>& fam, bool every_member = true) {
  using value = typename S::value_type;
  law_result r;
  for (std::size_t k = 0; k < fam.capacities.size(); ++k) {
    const auto& v = fam.capacities[k];
    const auto interval = ordinal_mobius_interval(v);
    std::vector<set_function<S>> members;
    if (every_member) {
      const auto grid = mobius_grid(v);
      members = interval_members(interval, std::span(grid));
    } else {
      members = {interval.lower, interval.upper};
    }
    for (const auto& f : fam.profiles_of(k)) {
      std::span<const value> fs(f);
      const auto expected = sugeno_symmetric(v, fs);
      ++r.checked;
      if (sugeno_symmetric_explicit(v, fs) != expected)
        return {status::fail, r.checked, "two-block form: v=" + text(v) + " f=" + text(f)};
      for (const auto& m : members) {
        ++r.checked;
        const auto blocks = mobius_terms(m, fs);
        for (const auto& t : blocks.mixed_block)
          if (!t.is_zero()) return {status::fail, r.checked, "mixed block nonzero: v=" + text(v) + " f=" + text(f)};
        if (sugeno_symmetric_mobius(m, fs) != expected)
          return {status::fail, r.checked, "Moebius form: v=" + text(v) + " m=" + text(m) + " f=" + text(f)};
      }
    }
  }
  return r;
}

/// V(-f) = -V(f) for the symmetric integral and the three variants (the
/// first one with both interval endpoints).
template <symmetric_scale S>
law_result law_symmetry(const family<S>& fam) {
  using value = typename S::value_type;
  law_result r;
  for (std::size_t k = 0; k < fam.capacities.size(); ++k) {
    const auto& v = fam.capacities[k];
    const auto interval = ordinal_mobius_interval(v);
    for (const auto& f : fam.profiles_of(k)) {
      std::vector<value> g;
      for (const auto& x : f) g.push_back(-x);
      std::span<const value> fs(f), gs(g);
      ++r.checked;
      const char* which = nullptr;
      if (sugeno_symmetric(v, gs) != -sugeno_symmetric(v, fs))
        which = "symmetric";
      else if (sugeno_variant1(interval.lower, gs) != -sugeno_variant1(interval.lower, fs))
        which = "variant 1 (lower)";
      else if (sugeno_variant1(interval.upper, gs) != -sugeno_variant1(interval.upper, fs))
        which = "variant 1 (upper)";
      else if (sugeno_variant2(v, gs) != -sugeno_variant2(v, fs))
        which = "variant 2";
      else if (sugeno_variant3(v, gs) != -sugeno_variant3(v, fs))
        which = "variant 3";
      if (which) return {status::fail, r.checked, std::string(which) + ": v=" + text(v) + " f=" + text(f)};
    }
  }
  return r;
}

template <symmetric_scale S>
struct monotonicity_witness {
  capacity<S> v;
  profile<S> lower;
  profile<S> upper;
};

/// First f <= f' (f' raised in one coordinate) with integral(f) > integral(f').
template <symmetric_scale S, class Integral>
std::optional<monotonicity_witness<S>> find_monotonicity_violation(const family<S>& fam, Integral&& integral,
                                                                   std::size_t* checked = nullptr) {
  using value = typename S::value_type;
  for (std::size_t k = 0; k < fam.capacities.size(); ++k) {
    const auto& v = fam.capacities[k];
    for (const auto& f : fam.profiles_of(k)) {
      const auto base = integral(v, std::span<const value>(f));
      for (const auto& g : raised_profiles(fam.scale, f)) {
        if (checked) ++*checked;
        if (base > integral(v, std::span<const value>(g))) return monotonicity_witness<S>{v, f, g};
      }
    }
  }
  return std::nullopt;
}

template <symmetric_scale S>
law_result law_monotone_symmetric(const family<S>& fam) {
  using value = typename S::value_type;
  law_result r;
  auto symmetric = [](const capacity<S>& v, std::span<const value> f) { return sugeno_symmetric(v, f); };
  if (auto w = find_monotonicity_violation(fam, symmetric, &r.checked))
    return {status::fail, r.checked, "v=" + text(w->v) + " f=" + text(w->lower) + " f'=" + text(w->upper)};
  return r;
}

template <symmetric_scale S>
law_result law_monotone_variant3(const family<S>& fam) {
  using value = typename S::value_type;
  law_result r;
  auto third = [](const capacity<S>& v, std::span<const value> f) { return sugeno_variant3(v, f); };
  if (auto w = find_monotonicity_violation(fam, third, &r.checked)) {
    const auto a = sugeno_variant3(w->v, std::span<const value>(w->lower));
    const auto b = sugeno_variant3(w->v, std::span<const value>(w->upper));
    return {status::fail, r.checked,
            "v=" + text(w->v) + " f=" + text(w->lower) + " -> " + text(a) + ", f'=" + text(w->upper) + " -> " + text(b)};
  }
  return r;
}

/// Tie-free pair on the unit scale where the third variant drops:
/// terms (-0.25, 0.2, 0.25) fold to 0.2, terms (-0.25, 0.25, 0) fold to 0.
inline monotonicity_witness<unit_scale> variant3_witness() {
  const unit_scale scale;
  auto u = [&](const char* x) { return scale.at(parse_rational(x)); };
  // index order: {}, {1}, {2}, {1,2}, {3}, {1,3}, {2,3}, {1,2,3}
  set_function<unit_scale> table(scale, 3, {u("0"), u("5/9"), u("0"), u("2/3"), u("1/4"), u("5/9"), u("1/2"), u("1")});
  return {capacity<unit_scale>(std::move(table)), {u("1/4"), u("1/5"), u("-2/7")}, {u("1/4"), u("3/5"), u("-2/7")}};
}

/// Pinned regression witness for the second variant: f <= f' on n = 3 over
/// Levels(3), no tied scores, yet the integral drops. Terms (-2,-2,2) fold
/// to 0 under angle, terms (-2,-1,2) to -1.
inline monotonicity_witness<levels_scale> variant2_witness() {
  const levels_scale scale(3);
  auto L = [&](int i) { return scale.at(i); };
  // v on {}, {1}, {2}, {1,2}, {3}, {1,3}, {2,3}, {1,2,3} (index order)
  set_function<levels_scale> table(scale, 3, {L(0), L(0), L(2), L(2), L(2), L(2), L(2), L(3)});
  return {capacity<levels_scale>(std::move(table)), {L(-2), L(-3), L(2)}, {L(-1), L(-3), L(2)}};
}

/// The second variant is not monotone: the pinned witness must still
/// violate monotonicity, and the search over the family reports its first
/// hit.
template <symmetric_scale S>
law_result law_variant2_monotonic(const family<S>& fam) {
  using value = typename S::value_type;
  law_result r;
  const auto pinned = variant2_witness();
  ++r.checked;
  const auto a = sugeno_variant2(pinned.v, std::span<const scale_value<level>>(pinned.lower));
  const auto b = sugeno_variant2(pinned.v, std::span<const scale_value<level>>(pinned.upper));
  if (!(a > b)) return {status::fail, r.checked, "pinned witness no longer violates monotonicity"};
  r.state = status::expected_fail;
  r.detail = "pinned witness v=" + text(pinned.v) + " f=" + text(pinned.lower) + " -> " + text(a) + ", f'=" +
             text(pinned.upper) + " -> " + text(b);
  auto second = [](const capacity<S>& v, std::span<const value> f) { return sugeno_variant2(v, f); };
  if (auto w = find_monotonicity_violation(fam, second, &r.checked))
    r.detail += "; search hit v=" + text(w->v) + " f=" + text(w->lower) + " f'=" + text(w->upper);
  else
    r.detail += "; no violation in this family";
  return r;
}

/// Whether the first variant depends on the Moebius representative. Reported,
/// not asserted.
template <symmetric_scale S>
law_result law_variant1_representative(const family<S>& fam) {
  using value = typename S::value_type;
  law_result r;
  r.state = status::report;
  std::size_t differing = 0;
  std::string first;
  for (std::size_t k = 0; k < fam.capacities.size(); ++k) {
    const auto& v = fam.capacities[k];
    const auto grid = mobius_grid(v);
    const auto members = interval_members(ordinal_mobius_interval(v), std::span(grid));
    for (const auto& f : fam.profiles_of(k)) {
      ++r.checked;
      std::span<const value> fs(f);
      const auto reference = sugeno_variant1(members.front(), fs);
      for (const auto& m : members)
        if (sugeno_variant1(m, fs) != reference) {
          if (differing++ == 0) first = "v=" + text(v) + " f=" + text(f);
          break;
        }
    }
  }
  r.detail = std::to_string(differing) + " of " + std::to_string(r.checked) + " instances depend on the representative";
  if (differing) r.detail += "; first: " + first;
  return r;
}

/// Every permutation of 1..n.
inline std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i + 1;
  std::vector<std::vector<int>> out;
  do out.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

/// v and f with player i renamed to p[i-1].
template <symmetric_scale S>
std::pair<capacity<S>, profile<S>> relabel(const capacity<S>& v, const profile<S>& f, const std::vector<int>& p) {
  const int n = v.players();
  set_function<S> table(v.scale(), n);
  for_each_set(n, [&](player_set A) {
    player_set image;
    for (int i : A.players()) image = image.with(p[static_cast<std::size_t>(i - 1)]);
    table[image] = v[A];
  });
  profile<S> g(f.size());
  for (int i = 1; i <= n; ++i)
    g[static_cast<std::size_t>(p[static_cast<std::size_t>(i - 1)] - 1)] = f[static_cast<std::size_t>(i - 1)];
  return {capacity<S>(std::move(table)), std::move(g)};
}

/// Relabelling players in both v and f leaves the symmetric integral (all
/// three forms) and the first variant unchanged, so for them the order of
/// tied scores cannot matter.
template <symmetric_scale S>
law_result law_tie_invariance(const family<S>& fam) {
  using value = typename S::value_type;
  law_result r;
  const auto perms = all_permutations(fam.players);
  auto evaluate = [](const capacity<S>& v, std::span<const value> f) {
    const auto interval = ordinal_mobius_interval(v);
    return std::vector<value>{sugeno_symmetric(v, f), sugeno_symmetric_explicit(v, f),
                              sugeno_symmetric_mobius(interval.lower, f), sugeno_variant1(interval.lower, f)};
  };
  for (std::size_t k = 0; k < fam.capacities.size(); ++k) {
    const auto& v = fam.capacities[k];
    for (const auto& f : fam.profiles_of(k)) {
      const auto expected = evaluate(v, std::span<const value>(f));
      for (const auto& p : perms) {
        const auto [w, g] = relabel(v, f, p);
        ++r.checked;
        if (evaluate(w, std::span<const value>(g)) != expected)
          return {status::fail, r.checked, "v=" + text(v) + " f=" + text(f)};
      }
    }
  }
  return r;
}

/// The second and third variants fold the sorted terms with rules that
/// count multiplicities, and the term multiset changes with the order of
/// tied scores. Counts the instances where relabelling changes the result.
template <symmetric_scale S>
law_result law_variant_tie_dependence(const family<S>& fam) {
  using value = typename S::value_type;
  law_result r;
  r.state = status::report;
  const auto perms = all_permutations(fam.players);
  std::size_t second = 0, third = 0;
  std::string first;
  for (std::size_t k = 0; k < fam.capacities.size(); ++k) {
    const auto& v = fam.capacities[k];
    for (const auto& f : fam.profiles_of(k)) {
      ++r.checked;
      std::span<const value> fs(f);
      const auto s2 = sugeno_variant2(v, fs);
      const auto s3 = sugeno_variant3(v, fs);
      bool d2 = false, d3 = false;
      for (const auto& p : perms) {
        const auto [w, g] = relabel(v, f, p);
        d2 = d2 || sugeno_variant2(w, std::span<const value>(g)) != s2;
        d3 = d3 || sugeno_variant3(w, std::span<const value>(g)) != s3;
      }
      second += d2;
      third += d3;
      if ((d2 || d3) && first.empty()) first = "v=" + text(v) + " f=" + text(f);
    }
  }
  r.detail = "variant 2: " + std::to_string(second) + ", variant 3: " + std::to_string(third) + " of " +
             std::to_string(r.checked) + " instances depend on the order of tied scores";
  if (!first.empty()) r.detail += "; first: " + first;
  return r;
}

// ---------------------------------------------------------------------------
// The worked example on three players

struct worked_example_instance {
  capacity<unit_scale> v;
  profile<unit_scale> f;
};

inline worked_example_instance worked_example() {
  const unit_scale scale;
  auto u = [&](const char* x) { return scale.at(parse_rational(x)); };
  // index order: {}, {1}, {2}, {1,2}, {3}, {1,3}, {2,3}, {1,2,3}
  set_function<unit_scale> table(scale, 3, {u("0"), u("0.3"), u("0.25"), u("0.4"), u("0.2"), u("0.3"), u("0.6"), u("1")});
  return {capacity<unit_scale>(std::move(table)), {u("-1"), u("0.3"), u("1")}};
}

/// The symmetric integral and the first two variants give 0, 0.25 and 0.2 on
/// the worked example.
inline law_result law_distinctness() {
  using value = scale_value<rational>;
  law_result r;
  const auto ex = worked_example();
  std::span<const value> f(ex.f);
  const unit_scale scale;
  const auto s = sugeno_symmetric(ex.v, f);
  const auto s1 = sugeno_variant1(ex.v, f, mobius_representative::lower);
  const auto s2 = sugeno_variant2(ex.v, f);
  r.checked = 3;
  if (s != scale.at(0) || s1 != scale.at(rational(1, 4)) || s2 != scale.at(rational(1, 5)))
    return {status::fail, r.checked, "got " + text(s) + ", " + text(s1) + ", " + text(s2)};
  r.detail = "symmetric=" + text(s) + " variant1=" + text(s1) + " variant2=" + text(s2);
  return r;
}

// ---------------------------------------------------------------------------
// Choquet reference laws (unit scale, random instances)

struct choquet_instance {
  real_set_function v;
  std::vector<rational> f;
};

inline choquet_instance random_choquet_instance(int n, rng_type& rng) {
  const unit_scale scale;
  auto cap = random_capacity(scale, n, rng);
  std::uniform_int_distribution<int> den(1, 12);
  std::vector<rational> f;
  for (int i = 0; i < n; ++i) {
    int d = den(rng);
    std::uniform_int_distribution<int> num(-d, d);
    f.emplace_back(num(rng), d);
  }
  return {to_real(cap), std::move(f)};
}

/// Choquet identities: Moebius forms, the sorted closed form and the two
/// reflection properties, exact on random instances with n = 1..max_players.
inline law_result law_choquet(int max_players, std::size_t samples, std::uint64_t seed, const std::string& which) {
  law_result r;
  rng_type rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const int n = 1 + static_cast<int>(s % static_cast<std::size_t>(max_players));
    auto [v, f] = random_choquet_instance(n, rng);
    std::vector<rational> neg_f;
    for (const auto& x : f) neg_f.push_back(-x);
    const auto plus = positive_part(f);
    ++r.checked;
    bool ok = true;
    if (which == "choquet-mobius") {
      ok = choquet_mobius(classical_mobius(v), plus) == choquet(v, plus);
    } else if (which == "sipos-mobius") {
      ok = sipos_mobius(classical_mobius(v), f) == choquet_symmetric(v, f);
    } else if (which == "sipos-explicit") {
      ok = sipos_explicit(v, f) == choquet_symmetric(v, f);
    } else if (which == "choquet-asymmetry") {
      ok = choquet_asymmetric(v, neg_f) == -choquet_asymmetric(real_conjugate(v), f);
    } else if (which == "choquet-symmetry") {
      ok = choquet_symmetric(v, neg_f) == -choquet_symmetric(v, f);
    }
    if (!ok) {
      std::string detail = which + " failed at n=" + std::to_string(n) + " f=(";
      for (std::size_t i = 0; i < f.size(); ++i) detail += (i ? "," : "") + format_rational(f[i]);
      return {status::fail, r.checked, detail + ")"};
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Registry

struct law {
  std::string name;
  std::string module;
  std::function<law_result(const config&)> run;
};

namespace detail {

/// Family of the config, on the levels or unit scale.
template <class Fn>
law_result on_family(const config& c, Fn&& fn, bool nonnegative_only = false) {
  if (c.exhaustive) {
    if (c.players > 3) return {status::skipped, 0, "exhaustive families need n <= 3"};
    return fn(exhaustive_family(c.players, c.levels, nonnegative_only));
  }
  if (c.unit) return fn(random_family(unit_scale{}, c.players, c.samples, c.seed, 4, nonnegative_only));
  return fn(random_family(levels_scale(c.levels), c.players, c.samples, c.seed, 4, nonnegative_only));
}

/// Same, for laws that enumerate the Moebius interval and need n <= 3.
template <class Fn>
law_result on_small_family(const config& c, Fn&& fn, bool nonnegative_only = false) {
  if (c.players > 3) return {status::skipped, 0, "interval enumeration needs n <= 3"};
  return on_family(c, std::forward<Fn>(fn), nonnegative_only);
}

}  // namespace detail

inline const std::vector<law>& all_laws() {
  static const std::vector<law> laws = [] {
    std::vector<law> out;
    auto add = [&](std::string name, std::string module, std::function<law_result(const config&)> fn) {
      out.push_back({std::move(name), std::move(module), std::move(fn)});
    };
    auto fam = [](auto fn, bool nonneg = false) {
      return [fn, nonneg](const config& c) {
        return detail::on_family(c, [&](const auto& family) { return fn(family); }, nonneg);
      };
    };
    auto small = [](auto fn, bool nonneg = false) {
      return [fn, nonneg](const config& c) {
        return detail::on_small_family(c, [&](const auto& family) { return fn(family); }, nonneg);
      };
    };

    add("involution", "scale", [](const config& c) { return law_involution(c.levels); });
    add("de-morgan", "scale", [](const config& c) { return law_de_morgan(c.levels); });
    add("marichal", "scale", [](const config& c) { return law_marichal(unit_grid(c.levels)); });
    add("symmax-commutative", "scale", [](const config& c) { return law_commutative(c.levels); });
    add("neutral-absorbant", "scale", [](const config& c) { return law_neutral_absorbant(c.levels); });
    add("inverse-reflection", "scale", [](const config& c) { return law_inverse_and_reflection(c.levels); });
    add("conditional-associativity", "scale",
        [](const config& c) { return law_conditional_associativity(c.levels); });
    add("symmin-associative", "scale", [](const config& c) { return law_symmin_associative(c.levels); });
    add("distributive", "scale", [](const config& c) { return law_distributive(c.levels); });

    add("rules-agreement", "rules", [](const config& c) { return law_rules_agreement(c.levels); });
    add("rules-symmetry", "rules", [](const config& c) { return law_rules_symmetry(c.levels); });
    add("rules-singleton", "rules", [](const config& c) { return law_rules_singleton(c.levels); });
    add("rules-monotone", "rules", [](const config& c) { return law_rules_monotone(c.levels); });
    add("angle-monotonic", "rules", [](const config& c) { return law_angle_monotonic(c.levels); });

    add("conjugate-involution", "capacity", fam([](const auto& f) { return law_conjugate_involution(f); }));
    add("named-capacities", "capacity", [](const config& c) {
      return c.unit ? law_named_capacities(unit_scale{}, c.players, 200, c.seed)
                    : law_named_capacities(levels_scale(c.levels), c.players, 200, c.seed);
    });

    add("classical-roundtrip", "mobius", [](const config& c) { return law_classical_roundtrip(4, 1000, c.seed); });
    add("mobius-interval", "mobius", small([](const auto& f) { return law_mobius_interval(f); }));
    add("even-odd-lower", "mobius", fam([](const auto& f) { return law_even_odd_lower(f); }));
    add("canonical-lower", "mobius", fam([](const auto& f) { return law_canonical_lower(f); }));
    add("reconstruction", "mobius", small([](const auto& f) { return law_reconstruction(f); }));
    add("conjugate-reconstruction", "mobius", fam([](const auto& f) { return law_conjugate_reconstruction(f); }));
    add("focal-structure", "mobius", [](const config& c) {
      return c.unit ? law_focal_structure(unit_scale{}, c.players, 200, c.seed)
                    : law_focal_structure(levels_scale(c.levels), c.players, 200, c.seed);
    });
    add("mobius-nonlinear", "mobius", [](const config&) { return law_mobius_nonlinear(); });

    add("mobius-representative", "integrals", small([](const auto& f) { return law_mobius_representative(f); }, true));
    add("symmetric-equivalence", "integrals", small([](const auto& f) { return law_symmetric_equivalence(f); }));
    add("symmetry", "integrals", fam([](const auto& f) { return law_symmetry(f); }));
    add("monotone-symmetric", "integrals", fam([](const auto& f) { return law_monotone_symmetric(f); }));
    add("monotone-variant3", "integrals", fam([](const auto& f) { return law_monotone_variant3(f); }));
    add("variant2-monotonic", "integrals", fam([](const auto& f) { return law_variant2_monotonic(f); }));
    add("variant1-representative", "integrals", small([](const auto& f) { return law_variant1_representative(f); }));
    add("tie-invariance", "integrals", [](const config& c) {
      if (c.players > 4) return law_result{status::skipped, 0, "permutation check needs n <= 4"};
      config lighter = c;
      lighter.samples = std::min<std::size_t>(c.samples, 500);
      return detail::on_family(lighter, [](const auto& f) { return law_tie_invariance(f); });
    });
    add("variant-tie-dependence", "integrals", [](const config& c) {
      if (c.players > 4) return law_result{status::skipped, 0, "permutation check needs n <= 4"};
      config lighter = c;
      lighter.samples = std::min<std::size_t>(c.samples, 500);
      return detail::on_family(lighter, [](const auto& f) { return law_variant_tie_dependence(f); });
    });
    add("distinctness", "integrals", [](const config&) { return law_distinctness(); });

    for (const char* name :
         {"choquet-mobius", "sipos-mobius", "sipos-explicit", "choquet-asymmetry", "choquet-symmetry"}) {
      add(name, "integrals", [name](const config& c) { return law_choquet(4, c.samples, c.seed, name); });
    }
    return out;
  }();
  return laws;
}

inline const law* find_law(std::string_view name) {
  for (const auto& l : all_laws())
    if (l.name == name) return &l;
  return nullptr;
}

}  // namespace symord::verify
