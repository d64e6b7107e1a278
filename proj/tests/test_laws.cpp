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

#include <symord/verify.hpp>

#include <gtest/gtest.h>

#include <set>

namespace {

using namespace symord::verify;

class ExhaustivePairs : public ::testing::TestWithParam<int> {};

TEST_P(ExhaustivePairs, EveryLawHolds) {
  config c;
  c.players = 2;
  c.levels = GetParam();
  for (const auto& l : all_laws()) {
    const auto r = l.run(c);
    EXPECT_NE(r.state, status::fail) << l.name << ": " << r.detail;
  }
}

INSTANTIATE_TEST_SUITE_P(Levels, ExhaustivePairs, ::testing::Values(1, 2, 3));

TEST(Laws, RegistryNamesAreUnique) {
  std::set<std::string> names;
  for (const auto& l : all_laws()) EXPECT_TRUE(names.insert(l.name).second) << l.name;
  EXPECT_NE(find_law("angle-monotonic"), nullptr);
  EXPECT_EQ(find_law("nope"), nullptr);
}

TEST(Laws, PinnedWitnessesAreExpectedFailures) {
  config c;
  EXPECT_EQ(find_law("angle-monotonic")->run(c).state, status::expected_fail);
  EXPECT_EQ(find_law("variant2-monotonic")->run(c).state, status::expected_fail);
}

TEST(Laws, ThreePlayerLevelsSample) {
  config c;
  c.players = 3;
  c.exhaustive = false;
  c.samples = 300;
  for (const char* name : {"mobius-interval", "mobius-representative", "symmetric-equivalence", "symmetry",
                           "monotone-symmetric", "even-odd-lower", "canonical-lower", "reconstruction"}) {
    const auto r = find_law(name)->run(c);
    EXPECT_EQ(r.state, status::pass) << name << ": " << r.detail;
  }
}

TEST(Laws, ThirdVariantFailsMonotonicityOnUnitScale) {
  config c;
  c.players = 3;
  c.exhaustive = false;
  c.unit = true;
  c.samples = 2000;
  const auto r = find_law("monotone-variant3")->run(c);
  EXPECT_EQ(r.state, status::fail);
}

}  // namespace
