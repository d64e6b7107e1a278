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

/// \file symord/text_format.hpp
///
/// Text form of scale values and subsets.
///
/// Levels scale: a value is a level label, "-label" for its reflection. Unit
/// scale: exact decimals or fractions ("0.3", "-1", "3/10"). Subsets are
/// written "{}" or "{1,3}" with ascending player ids, or with player names
/// when the problem declares them.

#pragma once

#include "symord/player_set.hpp"
#include "symord/rational.hpp"
#include "symord/scale.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace symord {

/// Malformed input text.
class parse_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Levels scale plus one label per level, bottom first.
class levels_codec {
 public:
  using scale_type = levels_scale;

  explicit levels_codec(std::vector<std::string> labels)
      : labels_(std::move(labels)), scale_(static_cast<int>(labels_.size()) - 1) {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (labels_[i].empty() || labels_[i].front() == '-')
        throw parse_error("level labels must be nonempty and must not start with '-'");
      for (std::size_t j = 0; j < i; ++j)
        if (labels_[i] == labels_[j]) throw parse_error("duplicate level label '" + labels_[i] + "'");
    }
  }

  /// Labels "0".."K".
  static levels_codec numbered(int top_index) {
    if (top_index < 1) throw parse_error("levels scale needs K >= 1");
    std::vector<std::string> labels;
    for (int i = 0; i <= top_index; ++i) labels.push_back(std::to_string(i));
    return levels_codec(std::move(labels));
  }

  const levels_scale& scale() const noexcept { return scale_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  scale_value<level> parse(std::string_view text) const {
    bool negative = !text.empty() && text.front() == '-';
    std::string_view label = negative ? text.substr(1) : text;
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) throw parse_error("unknown level label '" + std::string(text) + "'");
    level m{static_cast<int>(it - labels_.begin())};
    return negative ? scale_value<level>::negative(m) : scale_value<level>::positive(m);
  }

  std::string format(const scale_value<level>& a) const {
    const int i = a.magnitude().index;
    if (i < 0 || i >= static_cast<int>(labels_.size())) throw std::out_of_range("level outside the scale");
    return a.is_negative() ? "-" + labels_[static_cast<std::size_t>(i)] : labels_[static_cast<std::size_t>(i)];
  }

 private:
  std::vector<std::string> labels_;
  levels_scale scale_;
};

class unit_codec {
 public:
  using scale_type = unit_scale;

  const unit_scale& scale() const noexcept { return scale_; }

  /// Syntax only; range is checked by validation.
  scale_value<rational> parse(std::string_view text) const {
    rational x;
    try {
      x = parse_rational(text);
    } catch (const std::invalid_argument& e) {
      throw parse_error(e.what());
    }
    return x < 0 ? scale_value<rational>::negative(-x) : scale_value<rational>::positive(x);
  }

  std::string format(const scale_value<rational>& a) const {
    return format_rational(a.is_negative() ? rational(-a.magnitude()) : a.magnitude());
  }

 private:
  unit_scale scale_;
};

/// Player naming for subset strings. Without names, players are "1".."n".
class subset_codec {
 public:
  explicit subset_codec(int n) : n_(n) {
    if (n < 1 || n > max_players) throw parse_error("number of players must be in 1..24");
  }

  explicit subset_codec(std::vector<std::string> names) : n_(static_cast<int>(names.size())), names_(std::move(names)) {
    if (n_ < 1 || n_ > max_players) throw parse_error("number of players must be in 1..24");
    for (std::size_t i = 0; i < names_.size(); ++i) {
      const auto& s = names_[i];
      if (s.empty() || s.find_first_of("{},") != std::string::npos || s.find(' ') != std::string::npos)
        throw parse_error("invalid player name '" + s + "'");
      for (std::size_t j = 0; j < i; ++j)
        if (names_[j] == s) throw parse_error("duplicate player name '" + s + "'");
    }
  }

  int players() const noexcept { return n_; }
  bool has_names() const noexcept { return !names_.empty(); }

  std::string player_name(int player) const {
    return names_.empty() ? std::to_string(player) : names_[static_cast<std::size_t>(player - 1)];
  }

  /// Player id of a name, or of a numeric id when no names are declared.
  /// With names declared, numeric ids are still accepted as aliases.
  int parse_player(std::string_view token) const {
    if (!names_.empty()) {
      auto it = std::find(names_.begin(), names_.end(), token);
      if (it != names_.end()) return static_cast<int>(it - names_.begin()) + 1;
    }
    int id = 0;
    if (token.empty() || token.size() > 3) throw parse_error("unknown player '" + std::string(token) + "'");
    for (char c : token) {
      if (c < '0' || c > '9') throw parse_error("unknown player '" + std::string(token) + "'");
      id = id * 10 + (c - '0');
    }
    if (id < 1 || id > n_) throw parse_error("unknown player '" + std::string(token) + "'");
    return id;
  }

  player_set parse(std::string_view text) const {
    auto trim = [](std::string_view s) {
      while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
      while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
      return s;
    };
    std::string_view s = trim(text);
    if (s.size() < 2 || s.front() != '{' || s.back() != '}')
      throw parse_error("subset must be written as {..}: '" + std::string(text) + "'");
    s = trim(s.substr(1, s.size() - 2));
    player_set out;
    if (s.empty()) return out;
    while (true) {
      auto comma = s.find(',');
      int id = parse_player(trim(s.substr(0, comma)));
      if (out.contains(id)) throw parse_error("player listed twice in '" + std::string(text) + "'");
      out = out.with(id);
      if (comma == std::string_view::npos) break;
      s = s.substr(comma + 1);
    }
    return out;
  }

  std::string format(player_set A) const {
    std::string out = "{";
    bool first = true;
    for (int p : A.players()) {
      if (!first) out += ",";
      out += player_name(p);
      first = false;
    }
    return out + "}";
  }

 private:
  int n_;
  std::vector<std::string> names_;
};

/// Subsets of N ordered by size, then lexicographically by player id. Used
/// for every emitted table.
inline std::vector<player_set> display_order(int n) {
  std::vector<player_set> out;
  for_each_set(n, [&](player_set A) { out.push_back(A); });
  std::stable_sort(out.begin(), out.end(), [](player_set a, player_set b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.players() < b.players();
  });
  return out;
}

}  // namespace symord
