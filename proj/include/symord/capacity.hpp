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

/// \file symord/capacity.hpp
///
/// Set functions on 2^N and capacities (fuzzy measures).
///
/// A capacity is a set function valued in L+ with v(empty) = 0, v(N) = 1 and
/// A subset of B implying v(A) <= v(B). Tables are dense, indexed by the
/// characteristic index of each subset.

#pragma once

#include "symord/player_set.hpp"
#include "symord/scale.hpp"

#include <algorithm>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace symord {

/// L-valued function on the subsets of N, values possibly negative.
template <symmetric_scale Scale>
class set_function {
 public:
  using scale_type = Scale;
  using value_type = typename Scale::value_type;

  set_function(Scale scale, int n) : scale_(std::move(scale)), n_(n), table_(table_size(n)) {}

  set_function(Scale scale, int n, std::vector<value_type> table)
      : scale_(std::move(scale)), n_(n), table_(std::move(table)) {
    if (table_.size() != table_size(n)) throw std::invalid_argument("set_function: table length is not 2^n");
  }

  const Scale& scale() const noexcept { return scale_; }
  int players() const noexcept { return n_; }
  std::size_t size() const noexcept { return table_.size(); }
  player_set ground_set() const { return player_set::full(n_); }

  const value_type& operator[](player_set A) const { return table_[A.index()]; }
  value_type& operator[](player_set A) { return table_[A.index()]; }

  std::span<const value_type> values() const noexcept { return table_; }

  bool is_nonnegative() const {
    return std::all_of(table_.begin(), table_.end(), [](const value_type& a) { return a.is_nonnegative(); });
  }

  friend bool operator==(const set_function& a, const set_function& b) {
    return a.scale_ == b.scale_ && a.n_ == b.n_ && a.table_ == b.table_;
  }

 private:
  Scale scale_;
  int n_;
  std::vector<value_type> table_;
};

/// One failed capacity axiom.
struct capacity_violation {
  enum class kind { missing_subset, out_of_scale, negative_value, empty_not_zero, full_not_one, not_monotone };

  kind what;
  player_set subset;
  player_set superset;  // only for not_monotone: the edge subset -> superset
};

inline std::string describe(const capacity_violation& v, int n) {
  auto name = [](player_set s) {
    std::string out = "{";
    bool first = true;
    for (int p : s.players()) {
      if (!first) out += ",";
      out += std::to_string(p);
      first = false;
    }
    return out + "}";
  };
  switch (v.what) {
    case capacity_violation::kind::missing_subset: return "missing value for subset " + name(v.subset);
    case capacity_violation::kind::out_of_scale: return "value of " + name(v.subset) + " is not on the scale";
    case capacity_violation::kind::negative_value: return "value of " + name(v.subset) + " is negative";
    case capacity_violation::kind::empty_not_zero: return "v({}) must be the bottom of the scale";
    case capacity_violation::kind::full_not_one:
      return "v(" + name(player_set::full(n)) + ") must be the top of the scale";
    case capacity_violation::kind::not_monotone:
      return "monotonicity violated on edge " + name(v.subset) + " -> " + name(v.superset);
  }
  return "unknown violation";
}

class invalid_capacity : public std::invalid_argument {
 public:
  invalid_capacity(std::vector<capacity_violation> violations, int n)
      : std::invalid_argument(summary(violations, n)), violations_(std::move(violations)) {}

  const std::vector<capacity_violation>& violations() const noexcept { return violations_; }

 private:
  static std::string summary(const std::vector<capacity_violation>& vs, int n) {
    std::string out = "invalid capacity:";
    for (const auto& v : vs) out += " " + describe(v, n) + ";";
    return out;
  }

  std::vector<capacity_violation> violations_;
};

/// Every violated capacity axiom of a dense table. Monotonicity is checked on
/// the covering edges A -> A u {i}, which is sufficient.
template <symmetric_scale Scale>
std::vector<capacity_violation> validate(const set_function<Scale>& table) {
  using kind = capacity_violation::kind;
  std::vector<capacity_violation> out;
  const int n = table.players();
  const auto& scale = table.scale();
  bool values_ok = true;
  for_each_set(n, [&](player_set A) {
    const auto& a = table[A];
    if (a.is_negative()) {
      out.push_back({kind::negative_value, A, {}});
      values_ok = false;
    } else if (!on_scale(scale, a)) {
      out.push_back({kind::out_of_scale, A, {}});
      values_ok = false;
    }
  });
  if (!table[player_set{}].is_zero()) out.push_back({kind::empty_not_zero, {}, {}});
  if (table[table.ground_set()] != one(scale)) out.push_back({kind::full_not_one, table.ground_set(), {}});
  if (!values_ok) return out;
  for_each_set(n, [&](player_set A) {
    for (int i = 1; i <= n; ++i) {
      if (A.contains(i)) continue;
      player_set B = A.with(i);
      if (table[B] < table[A]) out.push_back({kind::not_monotone, A, B});
    }
  });
  return out;
}

/// Same checks for a sparse table, reporting subsets with no entry.
template <symmetric_scale Scale>
std::vector<capacity_violation> validate(const Scale& scale, int n,
                                         const std::map<player_set, typename Scale::value_type>& entries) {
  std::vector<capacity_violation> missing;
  set_function<Scale> dense(scale, n);
  for_each_set(n, [&](player_set A) {
    auto it = entries.find(A);
    if (it == entries.end())
      missing.push_back({capacity_violation::kind::missing_subset, A, {}});
    else
      dense[A] = it->second;
  });
  if (!missing.empty()) return missing;
  return validate(dense);
}

/// A validated, immutable capacity.
template <symmetric_scale Scale>
class capacity {
 public:
  using scale_type = Scale;
  using value_type = typename Scale::value_type;

  /// Throws invalid_capacity listing every violated axiom.
  explicit capacity(set_function<Scale> table) : table_(std::move(table)) {
    if (auto errors = validate(table_); !errors.empty()) throw invalid_capacity(std::move(errors), table_.players());
  }

  const Scale& scale() const noexcept { return table_.scale(); }
  int players() const noexcept { return table_.players(); }
  player_set ground_set() const { return table_.ground_set(); }
  const value_type& operator[](player_set A) const { return table_[A]; }
  const set_function<Scale>& table() const noexcept { return table_; }

  friend bool operator==(const capacity& a, const capacity& b) { return a.table_ == b.table_; }

 private:
  set_function<Scale> table_;
};

template <symmetric_scale Scale>
capacity<Scale> make_capacity(const Scale& scale, int n,
                              const std::map<player_set, typename Scale::value_type>& entries) {
  if (auto errors = validate(scale, n, entries); !errors.empty()) throw invalid_capacity(std::move(errors), n);
  set_function<Scale> dense(scale, n);
  for (const auto& [A, a] : entries) dense[A] = a;
  return capacity<Scale>(std::move(dense));
}

/// Conjugate v-bar(A) = n(v(A^c)).
template <symmetric_scale Scale>
capacity<Scale> conjugate(const capacity<Scale>& v) {
  const int n = v.players();
  set_function<Scale> out(v.scale(), n);
  for_each_set(n, [&](player_set A) { out[A] = negation_plus(v.scale(), v[A.complement(n)]); });
  return capacity<Scale>(std::move(out));
}

/// Unanimity game u_B: top on every nonempty superset of B, bottom elsewhere.
/// u_empty is therefore bottom at the empty set only.
template <symmetric_scale Scale>
capacity<Scale> unanimity(const Scale& scale, int n, player_set B) {
  if (!B.subset_of(player_set::full(n))) throw std::invalid_argument("unanimity: B is not a subset of N");
  set_function<Scale> out(scale, n);
  for_each_set(n, [&](player_set A) {
    if (!A.empty() && B.subset_of(A)) out[A] = one(scale);
  });
  return capacity<Scale>(std::move(out));
}

namespace detail {

template <symmetric_scale Scale>
void check_distribution(const Scale& scale, std::span<const typename Scale::value_type> pi) {
  if (pi.empty() || static_cast<int>(pi.size()) > max_players)
    throw std::invalid_argument("possibility distribution: need 1..24 players");
  for (const auto& p : pi)
    if (p.is_negative() || !on_scale(scale, p))
      throw std::invalid_argument("possibility distribution: values must lie in L+");
  if (*std::max_element(pi.begin(), pi.end()) != one(scale))
    throw std::invalid_argument("possibility distribution is not normalized (max must be the top)");
}

}  // namespace detail

/// Possibility measure Pi(A) = max over i in A of pi(i). pi[i-1] is the
/// possibility of player i.
template <symmetric_scale Scale>
capacity<Scale> possibility_from(const Scale& scale, std::span<const typename Scale::value_type> pi) {
  detail::check_distribution(scale, pi);
  const int n = static_cast<int>(pi.size());
  set_function<Scale> out(scale, n);
  for_each_set(n, [&](player_set A) {
    if (A.empty()) return;
    int lowest = A.players().front();
    out[A] = std::max(out[A.without(lowest)], pi[lowest - 1]);
  });
  return capacity<Scale>(std::move(out));
}

/// Necessity measure: conjugate of the possibility measure.
template <symmetric_scale Scale>
capacity<Scale> necessity_from(const Scale& scale, std::span<const typename Scale::value_type> pi) {
  return conjugate(possibility_from(scale, pi));
}

/// v(A u B) = v(A) v v(B) for every pair of subsets.
template <symmetric_scale Scale>
bool is_maxitive(const capacity<Scale>& v) {
  const std::size_t count = table_size(v.players());
  for (std::size_t a = 0; a < count; ++a)
    for (std::size_t b = a + 1; b < count; ++b) {
      player_set A(static_cast<std::uint32_t>(a));
      player_set B(static_cast<std::uint32_t>(b));
      if (v[A | B] != std::max(v[A], v[B])) return false;
    }
  return true;
}

}  // namespace symord
