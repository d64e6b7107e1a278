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

#include <symord/mobius.hpp>
#include <symord/verify.hpp>

#include <gtest/gtest.h>

namespace {

using namespace symord;
using lv = scale_value<level>;
using uv = scale_value<rational>;

player_set S(std::initializer_list<int> ids) { return player_set(ids); }

TEST(ClassicalMobius, MatchesDirectSum) {
  verify::rng_type rng(7);
  for (int n = 1; n <= 4; ++n)
    for (int trial = 0; trial < 50; ++trial) {
      const auto v = to_real(verify::random_capacity(unit_scale{}, n, rng));
      const auto m = classical_mobius(v);
      const auto expected = oracle::classical_mobius(std::vector<rational>(v.values().begin(), v.values().end()));
      for (std::size_t i = 0; i < expected.size(); ++i) ASSERT_EQ(m.values()[i], expected[i]);
      ASSERT_EQ(classical_zeta(m), v);
    }
}

TEST(ClassicalMobius, UnanimityGameIsAnIndicator) {
  const auto m = classical_mobius(to_real(unanimity(unit_scale{}, 3, S({1, 3}))));
  for_each_set(3, [&](player_set A) { EXPECT_EQ(m[A], A == S({1, 3}) ? rational(1) : rational(0)); });
}

TEST(OrdinalMobius, WorkedExampleInterval) {
  const auto ex = verify::worked_example();
  const auto interval = ordinal_mobius_interval(ex.v);
  for_each_set(3, [&](player_set A) {
    if (A == S({1, 3})) {
      EXPECT_EQ(interval.lower[A], uv{});
      EXPECT_EQ(interval.upper[A], unit_scale{}.at(rational(3, 10)));
    } else {
      EXPECT_EQ(interval.lower[A], interval.upper[A]) << A.index();
      EXPECT_EQ(interval.lower[A], ex.v[A]);
    }
  });
}

TEST(OrdinalMobius, LowerBoundDefinition) {
  for (const auto& v : verify::all_capacities(levels_scale(2), 3)) {
    const auto lower = ordinal_mobius_interval(v).lower;
    for_each_set(3, [&](player_set A) {
      bool strict = true;
      for (int i : A.players()) strict = strict && v[A.without(i)] < v[A];
      ASSERT_EQ(lower[A], strict ? v[A] : lv{});
    });
  }
}

TEST(OrdinalMobius, ExampleTables) {
  const levels_scale s(1);
  const auto O = s.at(0), I = s.at(1);
  set_function<levels_scale> g1(s, 2, {O, O, O, I});
  set_function<levels_scale> g2(s, 2, {O, I, I, I});
  EXPECT_EQ(ordinal_mobius_interval(capacity<levels_scale>(g1)).lower, g1);
  EXPECT_EQ(ordinal_mobius_interval(capacity<levels_scale>(g2)).lower, set_function<levels_scale>(s, 2, {O, I, I, O}));
  EXPECT_EQ(canonical_ordinal_mobius(g1), g1);
  EXPECT_EQ(canonical_ordinal_mobius(g2), set_function<levels_scale>(s, 2, {O, I, I, O}));
}

TEST(OrdinalMobius, CanonicalRejectsCeil) {
  const auto ex = verify::worked_example();
  EXPECT_THROW(canonical_ordinal_mobius(ex.v.table(), aggregation_rule::ceil), std::invalid_argument);
}

TEST(OrdinalMobius, EvenOddAndCanonicalEqualLowerBound) {
  for (const auto& v : verify::all_capacities(levels_scale(3), 3)) {
    const auto lower = ordinal_mobius_interval(v).lower;
    ASSERT_EQ(even_odd_mobius(v), lower);
    ASSERT_EQ(canonical_ordinal_mobius(v.table(), aggregation_rule::floor), lower);
    ASSERT_EQ(canonical_ordinal_mobius(v.table(), aggregation_rule::angle), lower);
  }
}

TEST(OrdinalMobius, BruteForceSolutionsOfWorkedExample) {
  const auto ex = verify::worked_example();
  const auto grid = verify::mobius_grid(ex.v);
  const auto solutions = verify::brute_force_solutions(ex.v, std::span(grid));
  // Free only at {1,3}, where any grid value in [0, 0.3] works: 0, 0.2, 0.25, 0.3.
  EXPECT_EQ(solutions.size(), 4u);
  for (const auto& m : solutions) EXPECT_TRUE(is_solution(m, ex.v, aggregation_rule::floor));
}

TEST(OrdinalMobius, Reconstruction) {
  const auto ex = verify::worked_example();
  const auto interval = ordinal_mobius_interval(ex.v);
  for_each_set(3, [&](player_set A) {
    EXPECT_EQ(reconstruct(interval.lower, A), ex.v[A]);
    EXPECT_EQ(reconstruct(interval.upper, A), ex.v[A]);
    EXPECT_EQ(conjugate_reconstruct(ex.v, A), ex.v[A]);
  });
}

TEST(OrdinalMobius, PossibilityAndNecessity) {
  const unit_scale s;
  std::vector<uv> pi{s.at(rational(1, 5)), s.at(rational(3, 5)), s.at(rational(1))};
  std::span<const uv> dist(pi);
  const auto mp = mobius_possibility(s, dist);
  for_each_set(3, [&](player_set A) { EXPECT_EQ(mp[A], A.size() == 1 ? pi[A.players()[0] - 1] : uv{}); });

  const auto mn = mobius_necessity(s, dist);
  EXPECT_EQ(mn[S({1, 2, 3})], s.at(rational(1)));
  EXPECT_EQ(mn[S({2, 3})], s.at(rational(4, 5)));
  EXPECT_EQ(mn[S({3})], s.at(rational(2, 5)));
  std::size_t nonzero = 0;
  for_each_set(3, [&](player_set A) { nonzero += !mn[A].is_zero(); });
  EXPECT_EQ(nonzero, 3u);
  EXPECT_TRUE(is_solution(mn, necessity_from(s, dist), aggregation_rule::floor));
}

TEST(OrdinalMobius, NecessityWithTiedDistribution) {
  const unit_scale s;
  std::vector<uv> pi{s.at(rational(1, 2)), s.at(rational(1, 2)), s.at(rational(1))};
  std::span<const uv> dist(pi);
  const auto mn = mobius_necessity(s, dist);
  EXPECT_EQ(mn, ordinal_mobius_interval(necessity_from(s, dist)).lower);
}

TEST(KMaxitive, PossibilityIsOneMaxitive) {
  const levels_scale s(3);
  std::vector<lv> pi{s.at(1), s.at(3), s.at(2)};
  const auto P = possibility_from(s, std::span<const lv>(pi));
  EXPECT_TRUE(is_k_maxitive(P, 1));
  const auto u = unanimity(s, 3, S({1, 2, 3}));
  EXPECT_FALSE(is_k_maxitive(u, 2));
  EXPECT_TRUE(is_k_maxitive(u, 3));
}

}  // namespace
