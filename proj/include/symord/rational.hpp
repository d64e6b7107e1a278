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

/// \file symord/rational.hpp
///
/// Exact rational numbers and their text form.
///
/// Values are parsed from and printed to exact text only: integers, terminating
/// decimals ("0.25", "-1") and fractions ("3/10"). Binary floating point never
/// enters the library.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace symord {

using rational = boost::multiprecision::cpp_rational;
using integer = boost::multiprecision::cpp_int;

namespace detail {

/// Decimal digits to an integer. cpp_int reads a leading 0 as octal, so
/// leading zeros are dropped first.
inline integer decimal_integer(std::string_view digits) {
  while (digits.size() > 1 && digits.front() == '0') digits.remove_prefix(1);
  return integer{std::string(digits.empty() ? "0" : digits)};
}

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace detail

/// Parses "7", "-0.3", "+2.50", "3/10" or "-3/10".
///
/// Throws std::invalid_argument on anything else, including a zero
/// denominator.
inline rational parse_rational(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  rational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!detail::all_digits(num) || !detail::all_digits(den))
      throw std::invalid_argument("malformed fraction '" + std::string(text) + "'");
    integer d = detail::decimal_integer(den);
    if (d == 0)
      throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    value = rational(detail::decimal_integer(num), d);
  } else {
    auto dot = s.find('.');
    auto whole = s.substr(0, dot);
    std::string_view frac;
    if (dot != std::string_view::npos) frac = s.substr(dot + 1);
    bool ok = dot == std::string_view::npos
                  ? detail::all_digits(whole)
                  : (whole.empty() || detail::all_digits(whole)) && detail::all_digits(frac);
    if (!ok) throw std::invalid_argument("malformed number '" + std::string(text) + "'");
    integer scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    integer digits = detail::decimal_integer(std::string(whole) + std::string(frac));
    value = rational(digits, scale);
  }
  return negative ? rational(-value) : value;
}

/// Shortest exact text: a terminating decimal when the reduced denominator
/// has no prime factor other than 2 and 5, otherwise "p/q".
inline std::string format_rational(const rational& value) {
  integer num = boost::multiprecision::numerator(value);
  integer den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();

  integer rest = den;
  int twos = 0;
  int fives = 0;
  while (rest % 2 == 0) { rest /= 2; ++twos; }
  while (rest % 5 == 0) { rest /= 5; ++fives; }
  if (rest != 1) return num.str() + "/" + den.str();

  int places = twos > fives ? twos : fives;
  integer scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  bool negative = num < 0;
  integer scaled = (negative ? integer(-num) : num) * (scale / den);
  std::string digits = scaled.str();
  if (digits.size() <= static_cast<std::size_t>(places))
    digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
  digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
  return negative ? "-" + digits : digits;
}

}  // namespace symord
