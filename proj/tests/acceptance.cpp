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

// Acceptance runner: one PASS/FAIL line per criterion, each with a pinned
// wall-clock limit. Exit status is nonzero when any criterion fails.

#include <symord/symord.hpp>
#include <symord/verify.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

namespace {

using namespace symord;
using namespace symord::verify;
using lv = scale_value<level>;
using uv = scale_value<rational>;

constexpr std::size_t random_instances = 10000;
constexpr std::size_t unit_instances = 2000;
constexpr std::uint64_t seed = 42;

struct outcome {
  bool ok;
  std::string detail;
};

struct criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<outcome()> check;
};

uv u(const char* x) { return unit_scale{}.at(parse_rational(x)); }

outcome merge(const std::vector<std::pair<std::string, law_result>>& parts) {
  std::size_t checked = 0;
  for (const auto& [name, r] : parts) {
    checked += r.checked;
    if (r.state == status::fail) return {false, name + ": " + r.detail};
    if (r.state == status::skipped) return {false, name + " skipped: " + r.detail};
  }
  return {true, std::to_string(checked) + " checks"};
}

/// Runs fn on the exhaustive n=2 families for K = 1..3 and on 10^4 random
/// n=3 capacities over Levels(3).
template <class Fn>
outcome on_standard_families(const std::string& name, Fn&& fn, bool nonnegative_only = false) {
  std::vector<std::pair<std::string, law_result>> parts;
  for (int k = 1; k <= 3; ++k)
    parts.emplace_back(name + " n=2 K=" + std::to_string(k), fn(exhaustive_family(2, k, nonnegative_only)));
  parts.emplace_back(name + " n=3 random",
                     fn(random_family(levels_scale(3), 3, random_instances, seed, 4, nonnegative_only)));
  return merge(parts);
}

outcome golden_integrals() {
  const auto ex = worked_example();
  const std::span<const uv> f(ex.f);
  const auto s = sugeno_symmetric(ex.v, f);
  const auto s1 = sugeno_variant1(ex.v, f, mobius_representative::lower);
  const auto s2 = sugeno_variant2(ex.v, f);
  const std::string got = "S=" + text(s) + " S1=" + text(s1) + " S2=" + text(s2);
  return {s == u("0") && s1 == u("0.25") && s2 == u("0.2"), got};
}

outcome golden_interval() {
  const auto ex = worked_example();
  const auto interval = ordinal_mobius_interval(ex.v);
  bool ok = true;
  for_each_set(3, [&](player_set A) {
    if (A == player_set({1, 3}))
      ok = ok && interval.lower[A] == u("0") && interval.upper[A] == u("0.3");
    else
      ok = ok && interval.lower[A] == interval.upper[A];
  });
  return {ok, "lower=" + text(interval.lower) + " upper=" + text(interval.upper)};
}

outcome golden_rules() {
  std::vector<uv> xs;
  for (int x : {3, 3, 3, 2, 1, 0, -2, -3, -3}) xs.push_back(unit_scale{}.at(rational(x, 3)));
  const std::span<const uv> span(xs);
  const auto a = fold_sym_max(span, aggregation_rule::floor);
  const auto b = fold_sym_max(span, aggregation_rule::ceil);
  const auto c = fold_sym_max(span, aggregation_rule::angle);
  const std::string got = "floor=" + text(a) + " ceil=" + text(b) + " angle=" + text(c) + " (unit 1/3)";
  return {a == u("0") && b == u("1") && c == u("1/3"), got};
}

outcome golden_angle() {
  const levels_scale s(5);
  auto fold = [&](std::initializer_list<int> xs) {
    std::vector<lv> v;
    for (int x : xs) v.push_back(s.at(x));
    return fold_sym_max(std::span<const lv>(v), aggregation_rule::angle);
  };
  const auto a = fold({-5, -5, -1, 2, 5});
  const auto b = fold({-5, -4, -1, 2, 5});
  return {a == s.at(2) && b == s.at(-4), "a=" + text(a) + " b=" + text(b)};
}

outcome scale_laws() {
  std::vector<std::pair<std::string, law_result>> parts;
  for (int k = 1; k <= 3; ++k) {
    config c;
    c.levels = k;
    for (const auto& l : all_laws())
      if (l.module == "scale") parts.emplace_back(l.name + " K=" + std::to_string(k), l.run(c));
  }
  return merge(parts);
}

outcome interval_suite() {
  return on_standard_families("mobius-interval", [](const auto& f) { return law_mobius_interval(f); });
}

outcome sugeno_mobius_suite() {
  auto representative = on_standard_families(
      "mobius-representative", [](const auto& f) { return law_mobius_representative(f); }, true);
  if (!representative.ok) return representative;
  auto even_odd = on_standard_families("even-odd-lower", [](const auto& f) { return law_even_odd_lower(f); });
  if (!even_odd.ok) return even_odd;
  return {true, representative.detail + ", " + even_odd.detail};
}

outcome symmetric_suite() {
  auto equivalence =
      on_standard_families("symmetric-equivalence", [](const auto& f) { return law_symmetric_equivalence(f); });
  if (!equivalence.ok) return equivalence;
  auto symmetry = on_standard_families("symmetry", [](const auto& f) { return law_symmetry(f); });
  if (!symmetry.ok) return symmetry;
  return {true, equivalence.detail + ", " + symmetry.detail};
}

outcome monotonicity_suite() {
  auto symmetric = on_standard_families("monotone-symmetric", [](const auto& f) { return law_monotone_symmetric(f); });
  if (!symmetric.ok) return symmetric;
  const auto unit = random_family(unit_scale{}, 3, unit_instances, seed);
  const auto unit_symmetric = law_monotone_symmetric(unit);
  if (unit_symmetric.state == status::fail) return {false, "monotone-symmetric unit: " + unit_symmetric.detail};

  const auto w = variant2_witness();
  const auto a = sugeno_variant2(w.v, std::span<const lv>(w.lower));
  const auto b = sugeno_variant2(w.v, std::span<const lv>(w.upper));
  if (!(a > b)) return {false, "pinned second-variant witness no longer violates monotonicity"};

  auto third = on_standard_families("monotone-variant3", [](const auto& f) { return law_monotone_variant3(f); });
  if (!third.ok) return third;
  const auto unit_third = law_monotone_variant3(unit);
  if (unit_third.state == status::fail) return {false, "monotone-variant3 unit: " + unit_third.detail};
  return {true, symmetric.detail + ", " + third.detail};
}

outcome choquet_suite() {
  std::vector<std::pair<std::string, law_result>> parts;
  for (const char* name : {"choquet-mobius", "sipos-mobius", "sipos-explicit", "choquet-asymmetry", "choquet-symmetry"})
    parts.emplace_back(name, law_choquet(4, random_instances, seed, name));
  return merge(parts);
}

}  // namespace

int main() {
  const std::vector<criterion> criteria = {
      {1, "worked example integrals", 1, golden_integrals},
      {2, "worked example Moebius interval", 1, golden_interval},
      {3, "fold rules on the integer example", 1, golden_rules},
      {4, "angle rule non-monotonicity", 1, golden_angle},
      {5, "symmetric-maximum law suite", 10, scale_laws},
      {6, "Moebius interval suite", 60, interval_suite},
      {7, "Sugeno Moebius form suite", 60, sugeno_mobius_suite},
      {8, "symmetric integral equivalence suite", 60, symmetric_suite},
      {9, "monotonicity suite", 60, monotonicity_suite},
      {10, "Choquet reference suite", 60, choquet_suite},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    auto result = c.check();
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (result.ok && seconds > c.limit_seconds) {
      result.ok = false;
      result.detail += "; over time limit";
    }
    failures += !result.ok;
    std::printf("%s %2d %-40s %7.2fs (limit %gs) %s\n", result.ok ? "PASS" : "FAIL", c.id, c.title.c_str(), seconds,
                c.limit_seconds, result.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
