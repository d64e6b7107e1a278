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

// Builds the three-player example in code and prints the symmetric Sugeno
// integral next to its three variants and the Choquet integrals.

#include <symord/symord.hpp>

#include <iostream>

int main() {
  using namespace symord;

  const unit_scale scale;
  const subset_codec names(3);
  const unit_codec text;
  auto u = [&](const char* x) { return text.parse(x); };

  const auto v = make_capacity(scale, 3,
                               {{names.parse("{}"), u("0")},
                                {names.parse("{1}"), u("0.3")},
                                {names.parse("{2}"), u("0.25")},
                                {names.parse("{3}"), u("0.2")},
                                {names.parse("{1,2}"), u("0.4")},
                                {names.parse("{1,3}"), u("0.3")},
                                {names.parse("{2,3}"), u("0.6")},
                                {names.parse("{1,2,3}"), u("1")}});
  const std::vector f = {u("-1"), u("0.3"), u("1")};
  const std::span<const scale_value<rational>> fs(f);

  std::cout << "symmetric Sugeno  " << text.format(sugeno_symmetric(v, fs)) << '\n'
            << "variant 1         " << text.format(sugeno_variant1(v, fs)) << '\n'
            << "variant 2         " << text.format(sugeno_variant2(v, fs)) << '\n'
            << "variant 3         " << text.format(sugeno_variant3(v, fs)) << '\n';

  std::vector<rational> numbers;
  for (const auto& a : f) numbers.push_back(a.is_negative() ? rational(-a.magnitude()) : a.magnitude());
  const auto real = to_real(v);
  std::cout << "Sipos (symmetric) " << format_rational(choquet_symmetric(real, numbers)) << '\n'
            << "asymmetric        " << format_rational(choquet_asymmetric(real, numbers)) << '\n';

  const auto interval = ordinal_mobius_interval(v);
  for (player_set A : display_order(3))
    if (interval.lower[A] != interval.upper[A])
      std::cout << "Moebius interval at " << names.format(A) << ": [" << text.format(interval.lower[A]) << ", "
                << text.format(interval.upper[A]) << "]\n";
}
