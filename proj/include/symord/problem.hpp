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

/// \file symord/problem.hpp
///
/// Problem files: one JSON document describing a scale, a capacity and
/// optionally a profile.
///
/// \code
/// {
///   "scale":    {"kind": "unit"},                  // or {"kind": "levels", "labels": ["O","a","b","1"]}
///   "players":  ["1", "2", "3"],                   // optional names; or "n": 3
///   "capacity": {"{}": "0", "{1}": "0.3", ..., "{1,2,3}": "1"},
///   "profile":  ["-1", "0.3", "1"],                // by player, or {"name": "value", ...}
///   "options":  {"rule": "floor", "mobius": "lower", "outputs": ["sugeno_sym"]}
/// }
/// \endcode
///
/// Values are strings in the scale's text form. Integral JSON numbers are
/// accepted on the unit scale; fractional JSON numbers are not, since they
/// are binary floating point.

#pragma once

#include "symord/capacity.hpp"
#include "symord/rules.hpp"
#include "symord/sugeno.hpp"
#include "symord/text_format.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

namespace symord {

/// Well-formed input that breaks a domain constraint.
class validation_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct problem_options {
  std::optional<aggregation_rule> rule;
  mobius_representative representative = mobius_representative::lower;
  std::vector<std::string> outputs;
};

template <class Codec>
struct problem {
  using codec_type = Codec;
  using scale_type = typename Codec::scale_type;
  using value_type = typename scale_type::value_type;

  Codec values;
  subset_codec subsets;
  capacity<scale_type> v;
  std::optional<profile<scale_type>> f;
  problem_options options;
};

using any_problem = std::variant<problem<levels_codec>, problem<unit_codec>>;

namespace detail {

inline std::string value_text(const nlohmann::json& j, bool integers_ok) {
  if (j.is_string()) return j.get<std::string>();
  if (integers_ok && j.is_number_integer()) return std::to_string(j.get<long long>());
  if (j.is_number_float())
    throw parse_error("value " + j.dump() + " is a binary float; write it as a string such as \"0.3\" or \"3/10\"");
  throw parse_error("expected a value string, got " + j.dump());
}

inline const nlohmann::json& require(const nlohmann::json& doc, const char* key) {
  if (!doc.contains(key)) throw parse_error(std::string("missing \"") + key + "\"");
  return doc.at(key);
}

inline problem_options parse_options(const nlohmann::json& doc) {
  problem_options out;
  if (!doc.contains("options")) return out;
  const auto& o = doc.at("options");
  if (!o.is_object()) throw parse_error("\"options\" must be an object");
  if (o.contains("rule")) {
    if (!o.at("rule").is_string()) throw parse_error("\"options.rule\" must be a string");
    auto r = parse_rule(o.at("rule").get<std::string>());
    if (!r) throw parse_error("unknown rule " + o.at("rule").dump());
    out.rule = *r;
  }
  if (o.contains("mobius")) {
    const auto& m = o.at("mobius");
    if (m == "lower")
      out.representative = mobius_representative::lower;
    else if (m == "upper")
      out.representative = mobius_representative::upper;
    else
      throw parse_error("\"options.mobius\" must be \"lower\" or \"upper\"");
  }
  if (o.contains("outputs")) {
    if (!o.at("outputs").is_array()) throw parse_error("\"options.outputs\" must be an array");
    for (const auto& name : o.at("outputs")) {
      if (!name.is_string()) throw parse_error("\"options.outputs\" entries must be strings");
      out.outputs.push_back(name.get<std::string>());
    }
  }
  return out;
}

inline subset_codec parse_players(const nlohmann::json& doc) {
  if (doc.contains("players")) {
    const auto& p = doc.at("players");
    if (!p.is_array()) throw parse_error("\"players\" must be an array of names");
    std::vector<std::string> names;
    for (const auto& name : p) {
      if (!name.is_string()) throw parse_error("player names must be strings");
      names.push_back(name.get<std::string>());
    }
    if (doc.contains("n") && doc.at("n") != static_cast<long long>(names.size()))
      throw parse_error("\"n\" disagrees with the length of \"players\"");
    return subset_codec(std::move(names));
  }
  if (doc.contains("n")) {
    if (!doc.at("n").is_number_integer()) throw parse_error("\"n\" must be an integer");
    return subset_codec(doc.at("n").get<int>());
  }
  if (doc.contains("profile") && doc.at("profile").is_array())
    return subset_codec(static_cast<int>(doc.at("profile").size()));
  throw parse_error("cannot tell the number of players: give \"players\" or \"n\"");
}

template <class Codec>
problem<Codec> parse_with(const nlohmann::json& doc, Codec values, bool integers_ok) {
  using scale_type = typename Codec::scale_type;
  using value_type = typename scale_type::value_type;

  subset_codec subsets = parse_players(doc);
  const int n = subsets.players();

  const auto& table = require(doc, "capacity");
  if (!table.is_object()) throw parse_error("\"capacity\" must be an object of subset -> value");
  std::map<player_set, value_type> entries;
  for (const auto& [key, val] : table.items()) {
    player_set A = subsets.parse(key);
    if (entries.count(A)) throw parse_error("subset " + subsets.format(A) + " listed twice");
    entries.emplace(A, values.parse(value_text(val, integers_ok)));
  }

  std::optional<profile<scale_type>> f;
  if (doc.contains("profile")) {
    const auto& p = doc.at("profile");
    profile<scale_type> scores(static_cast<std::size_t>(n));
    if (p.is_array()) {
      if (static_cast<int>(p.size()) != n) throw parse_error("\"profile\" must list one value per player");
      for (int i = 0; i < n; ++i) scores[static_cast<std::size_t>(i)] = values.parse(value_text(p.at(i), integers_ok));
    } else if (p.is_object()) {
      std::vector<bool> seen(static_cast<std::size_t>(n), false);
      for (const auto& [name, val] : p.items()) {
        int id = subsets.parse_player(name);
        if (seen[static_cast<std::size_t>(id - 1)]) throw parse_error("player '" + name + "' scored twice");
        seen[static_cast<std::size_t>(id - 1)] = true;
        scores[static_cast<std::size_t>(id - 1)] = values.parse(value_text(val, integers_ok));
      }
      if (std::find(seen.begin(), seen.end(), false) != seen.end())
        throw parse_error("\"profile\" must score every player");
    } else {
      throw parse_error("\"profile\" must be an array or an object");
    }
    for (int i = 0; i < n; ++i)
      if (!on_scale(values.scale(), scores[static_cast<std::size_t>(i)]))
        throw validation_error("profile value of player " + subsets.player_name(i + 1) + " is not on the scale");
    f = std::move(scores);
  }

  auto options = parse_options(doc);
  auto v = make_capacity(values.scale(), n, entries);  // throws invalid_capacity
  return problem<Codec>{std::move(values), std::move(subsets), std::move(v), std::move(f), std::move(options)};
}

}  // namespace detail

/// Builds a problem from a parsed document. Throws parse_error for malformed
/// content, invalid_capacity or validation_error for domain violations.
inline any_problem parse_problem(const nlohmann::json& doc) {
  if (!doc.is_object()) throw parse_error("problem file must be a JSON object");
  const auto& scale = detail::require(doc, "scale");
  if (!scale.is_object() || !scale.contains("kind")) throw parse_error("\"scale\" needs a \"kind\"");
  const auto& kind = scale.at("kind");
  if (kind == "unit") return detail::parse_with(doc, unit_codec{}, true);
  if (kind == "levels") {
    if (scale.contains("labels")) {
      const auto& labels = scale.at("labels");
      if (!labels.is_array()) throw parse_error("\"scale.labels\" must be an array");
      std::vector<std::string> names;
      for (const auto& l : labels) {
        if (!l.is_string()) throw parse_error("level labels must be strings");
        names.push_back(l.get<std::string>());
      }
      if (names.size() < 2) throw parse_error("a levels scale needs at least two labels");
      return detail::parse_with(doc, levels_codec(std::move(names)), false);
    }
    if (scale.contains("k") && scale.at("k").is_number_integer())
      return detail::parse_with(doc, levels_codec::numbered(scale.at("k").get<int>()), false);
    throw parse_error("a levels scale needs \"labels\" or an integer \"k\"");
  }
  throw parse_error("unknown scale kind " + kind.dump());
}

inline any_problem parse_problem_text(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw parse_error(std::string("malformed JSON: ") + e.what());
  }
  return parse_problem(doc);
}

inline any_problem load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_problem_text(buffer.str());
}

}  // namespace symord
