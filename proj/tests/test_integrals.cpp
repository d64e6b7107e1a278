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

#include "oracles.hpp"

#include <symord/choquet.hpp>
#include <symord/sugeno.hpp>
#include <symord/verify.hpp>

#include <gtest/gtest.h>

#include <set>

namespace {

using namespace symord;
using lv = scale_value<level>;
using uv = scale_value<rational>;

uv u(const char* x) { return unit_scale{}.at(parse_rational(x)); }

std::vector<uv> us(std::initializer_list<const char*> xs) {
  std::vector<uv> out;
  for (auto x : xs) out.push_back(u(x));
  return out;
}

template <class V>
std::multiset<V> bag(const std::vector<V>& xs) {
  return {xs.begin(), xs.end()};
}

bool distinct(const std::vector<lv>& f) { return std::set<lv>(f.begin(), f.end()).size() == f.size(); }

TEST(WorkedExample, SugenoParts) {
  const auto ex = verify::worked_example();
  const std::span<const uv> f(ex.f);
  EXPECT_EQ(sugeno(ex.v, std::span<const uv>(positive_part(f))), u("0.3"));
  EXPECT_EQ(sugeno(ex.v, std::span<const uv>(negative_part(f))), u("0.3"));
  EXPECT_EQ(sugeno_symmetric(ex.v, f), u("0"));
  EXPECT_EQ(sugeno_symmetric_explicit(ex.v, f), u("0"));
}

TEST(WorkedExample, Variants) {
  const auto ex = verify::worked_example();
  const std::span<const uv> f(ex.f);
  EXPECT_EQ(sugeno_variant1(ex.v, f, mobius_representative::lower), u("0.25"));
  EXPECT_EQ(sugeno_variant2(ex.v, f), u("0.2"));
  EXPECT_EQ(sugeno_variant3(ex.v, f), u("0.2"));

  const auto lower = ordinal_mobius_interval(ex.v).lower;
  EXPECT_EQ(bag(variant1_terms(lower, f)), bag(us({"-0.3", "0.25", "0.2", "0", "0", "0.3", "0"})));
  EXPECT_EQ(bag(sorted_terms(ex.v, f).all()), bag(us({"-0.3", "0.3", "0.2"})));
}

TEST(WorkedExample, MobiusFormAgreesOnEveryRepresentative) {
  const auto ex = verify::worked_example();
  const std::span<const uv> f(ex.f);
  const auto grid = verify::mobius_grid(ex.v);
  for (const auto& m : verify::brute_force_solutions(ex.v, std::span(grid)))
    EXPECT_EQ(sugeno_symmetric_mobius(m, f), u("0"));
}

TEST(Sugeno, MatchesThresholdOracle) {
  for (const auto& v : verify::all_capacities(levels_scale(3), 3)) {
    const auto table = oracle::as_ints(v);
    for (const auto& f : verify::all_profiles(levels_scale(3), 3)) {
      const std::span<const lv> fs(f);
      const auto fi = oracle::as_ints(f);
      ASSERT_EQ(oracle::as_int(sugeno_symmetric(v, fs)), oracle::sugeno_symmetric(table, fi));
      if (f == positive_part(fs)) {
        ASSERT_EQ(oracle::as_int(sugeno(v, fs)), oracle::sugeno(table, fi));
      }
    }
  }
}

TEST(Sugeno, RejectsNegativeProfile) {
  const auto ex = verify::worked_example();
  EXPECT_THROW(sugeno(ex.v, std::span<const uv>(ex.f)), std::invalid_argument);
}

TEST(Sugeno, RejectsWrongLength) {
  const auto ex = verify::worked_example();
  const auto f = us({"0.1", "0.2"});
  EXPECT_THROW(sugeno_symmetric(ex.v, std::span<const uv>(f)), std::invalid_argument);
  EXPECT_THROW(sugeno_variant2(ex.v, std::span<const uv>(f)), std::invalid_argument);
}

TEST(Sugeno, UnanimityGivesMinimum) {
  const levels_scale s(4);
  const auto v = unanimity(s, 3, player_set::full(3));
  const std::vector<lv> f{s.at(3), s.at(1), s.at(4)};
  EXPECT_EQ(sugeno(v, std::span<const lv>(f)), s.at(1));
}

TEST(Variants, TieFreeProfilesMatchOracles) {
  const levels_scale s(3);
  for (const auto& v : verify::all_capacities(s, 3)) {
    const auto table = oracle::as_ints(v);
    const auto lower = ordinal_mobius_interval(v).lower;
    const auto m = oracle::as_ints(lower);
    for (const auto& f : verify::all_profiles(s, 3)) {
      const std::span<const lv> fs(f);
      const auto fi = oracle::as_ints(f);
      ASSERT_EQ(oracle::as_int(sugeno_variant1(lower, fs)), oracle::fold_angle(oracle::mobius_terms(m, fi, 3)));
      if (!distinct(f)) continue;
      const auto terms = oracle::two_block_terms(table, fi);
      ASSERT_EQ(oracle::as_int(sugeno_variant2(v, fs)), oracle::fold_angle(terms));
      ASSERT_EQ(oracle::as_int(sugeno_variant3(v, fs)), oracle::fold_ceil(terms));
      ASSERT_EQ(bag(oracle::as_ints(sorted_terms(v, fs).all())), bag(terms));
    }
  }
}

TEST(Variants, SymmetricUnderNegation) {
  const levels_scale s(3);
  for (const auto& v : verify::all_capacities(s, 3))
    for (const auto& f : verify::all_profiles(s, 3)) {
      std::vector<lv> g;
      for (const auto& x : f) g.push_back(-x);
      const std::span<const lv> fs(f), gs(g);
      ASSERT_EQ(sugeno_symmetric(v, gs), -sugeno_symmetric(v, fs));
      ASSERT_EQ(sugeno_variant2(v, gs), -sugeno_variant2(v, fs));
      ASSERT_EQ(sugeno_variant3(v, gs), -sugeno_variant3(v, fs));
    }
}

TEST(Variants, SortConventionReflectsTies) {
  const levels_scale s(2);
  const std::vector<lv> f{s.at(-1), s.at(1), s.at(-1), s.at(1)};
  const auto sorted = sort_profile(std::span<const lv>(f));
  EXPECT_EQ(sorted.order, (std::vector<int>{3, 1, 2, 4}));
  EXPECT_EQ(sorted.split, 2);
}

TEST(Variants, SecondVariantIsNotMonotone) {
  const auto w = verify::variant2_witness();
  EXPECT_LT(oracle::as_ints(w.lower)[0], oracle::as_ints(w.upper)[0]);
  EXPECT_GT(sugeno_variant2(w.v, std::span<const lv>(w.lower)), sugeno_variant2(w.v, std::span<const lv>(w.upper)));
}

TEST(Variants, ThirdVariantIsNotMonotone) {
  const auto w = verify::variant3_witness();
  for (std::size_t i = 0; i < w.lower.size(); ++i) EXPECT_LE(w.lower[i], w.upper[i]);
  EXPECT_GT(sugeno_variant3(w.v, std::span<const uv>(w.lower)), sugeno_variant3(w.v, std::span<const uv>(w.upper)));
  // The symmetric integral itself stays monotone on the same pair.
  EXPECT_LE(sugeno_symmetric(w.v, std::span<const uv>(w.lower)), sugeno_symmetric(w.v, std::span<const uv>(w.upper)));
}

// ---------------------------------------------------------------------------
// Choquet family

real_set_function additive(std::initializer_list<rational> weights) {
  const int n = static_cast<int>(weights.size());
  std::vector<rational> w(weights);
  real_set_function v(n);
  for_each_set(n, [&](player_set A) {
    for (int i : A.players()) v[A] += w[static_cast<std::size_t>(i - 1)];
  });
  return v;
}

TEST(Choquet, AdditiveIsWeightedMean) {
  const auto v = additive({rational(1, 2), rational(1, 2)});
  const std::vector<rational> f{rational(0), rational(1)};
  EXPECT_EQ(choquet(v, std::span<const rational>(f)), rational(1, 2));
  const std::vector<rational> g{rational(-1), rational(3)};
  EXPECT_THROW(choquet(v, std::span<const rational>(g)), std::invalid_argument);
  EXPECT_EQ(choquet_symmetric(v, std::span<const rational>(g)), rational(1));
}

TEST(Choquet, UnanimityGivesMinimum) {
  const auto v = to_real(unanimity(unit_scale{}, 3, player_set::full(3)));
  const std::vector<rational> f{rational(3, 4), rational(1, 5), rational(1)};
  EXPECT_EQ(choquet(v, std::span<const rational>(f)), rational(1, 5));
}

TEST(Choquet, MatchesLayerOracleAndMobiusForm) {
  verify::rng_type rng(11);
  for (int n = 1; n <= 4; ++n)
    for (int trial = 0; trial < 100; ++trial) {
      auto inst = verify::random_choquet_instance(n, rng);
      std::vector<rational> f;
      for (const auto& x : inst.f) f.push_back(x < 0 ? rational(-x) : x);
      const std::span<const rational> fs(f), gs(inst.f);
      const std::vector<rational> table(inst.v.values().begin(), inst.v.values().end());
      ASSERT_EQ(choquet(inst.v, fs), oracle::choquet(table, f));
      const auto m = classical_mobius(inst.v);
      ASSERT_EQ(choquet_mobius(m, fs), choquet(inst.v, fs));
      ASSERT_EQ(sipos_mobius(m, gs), choquet_symmetric(inst.v, gs));
      ASSERT_EQ(sipos_explicit(inst.v, gs), choquet_symmetric(inst.v, gs));
      std::vector<rational> neg;
      for (const auto& x : inst.f) neg.push_back(-x);
      ASSERT_EQ(choquet_symmetric(inst.v, std::span<const rational>(neg)), -choquet_symmetric(inst.v, gs));
      ASSERT_EQ(choquet_asymmetric(inst.v, std::span<const rational>(neg)),
                -choquet_asymmetric(real_conjugate(inst.v), gs));
    }
}

TEST(Choquet, RejectsWrongLength) {
  const auto v = additive({rational(1)});
  const std::vector<rational> f{rational(0), rational(1)};
  EXPECT_THROW(choquet(v, std::span<const rational>(f)), std::invalid_argument);
}

}  // namespace
