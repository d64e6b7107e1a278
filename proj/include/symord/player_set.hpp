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

#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace symord {

inline constexpr int max_players = 24;

/// Subset of N = {1,...,n}. Player i occupies bit i-1, so the characteristic
/// index doubles as the position in a dense table of length 2^n.
class player_set {
 public:
  constexpr player_set() = default;
  constexpr explicit player_set(std::uint32_t bits) : bits_(bits) {}

  constexpr player_set(std::initializer_list<int> players) {
    for (int p : players) bits_ |= bit(p);
  }

  static constexpr player_set full(int n) { return player_set((std::uint32_t{1} << n) - 1); }
  static constexpr player_set singleton(int player) { return player_set(bit(player)); }

  constexpr std::uint32_t bits() const noexcept { return bits_; }
  constexpr std::size_t index() const noexcept { return bits_; }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr int size() const noexcept { return std::popcount(bits_); }
  constexpr bool contains(int player) const { return (bits_ & bit(player)) != 0; }
  constexpr bool subset_of(player_set other) const noexcept { return (bits_ & ~other.bits_) == 0; }

  constexpr player_set with(int player) const { return player_set(bits_ | bit(player)); }
  constexpr player_set without(int player) const { return player_set(bits_ & ~bit(player)); }
  constexpr player_set complement(int n) const { return player_set(full(n).bits_ & ~bits_); }

  /// Ascending player ids.
  std::vector<int> players() const {
    std::vector<int> out;
    for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
    return out;
  }

  friend constexpr player_set operator|(player_set a, player_set b) { return player_set(a.bits_ | b.bits_); }
  friend constexpr player_set operator&(player_set a, player_set b) { return player_set(a.bits_ & b.bits_); }
  friend constexpr auto operator<=>(player_set, player_set) = default;

 private:
  static constexpr std::uint32_t bit(int player) {
    if (player < 1 || player > max_players) throw std::out_of_range("player id outside 1..24");
    return std::uint32_t{1} << (player - 1);
  }

  std::uint32_t bits_ = 0;
};

inline std::size_t table_size(int n) {
  if (n < 0 || n > max_players) throw std::out_of_range("number of players outside 0..24");
  return std::size_t{1} << n;
}

/// Calls fn(B) for every B subset of A, the empty set included, in
/// decreasing index order.
template <class Fn>
void for_each_subset(player_set A, Fn&& fn) {
  std::uint32_t a = A.bits();
  std::uint32_t b = a;
  while (true) {
    fn(player_set(b));
    if (b == 0) break;
    b = (b - 1) & a;
  }
}

/// Calls fn(A) for every subset of N in increasing index order; subsets come
/// before their supersets.
template <class Fn>
void for_each_set(int n, Fn&& fn) {
  const std::size_t count = table_size(n);
  for (std::size_t i = 0; i < count; ++i) fn(player_set(static_cast<std::uint32_t>(i)));
}

}  // namespace symord
