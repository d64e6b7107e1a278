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

// Subcommands of the symord tool. Each writes line-delimited JSON records to
// `out`, diagnostics to `err`, and returns the process exit code.

#pragma once

#include "symord/symord.hpp"
#include "symord/verify.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace symord::cli {

using record = nlohmann::ordered_json;

enum exit_code : int { ok = 0, parse_failure = 1, validation_failure = 2, law_failure = 3 };

/// Every output name `compute` knows, in emission order.
inline const std::vector<std::string>& output_names() {
  static const std::vector<std::string> names = {"choquet", "choquet_sym", "choquet_asym", "sugeno",         "sugeno_sym",
                                                 "v1",      "v2",          "v3",           "mobius_interval"};
  return names;
}

struct compute_options {
  std::string input;
  std::optional<aggregation_rule> rule;
  std::optional<mobius_representative> representative;
  bool all = false;
  std::vector<std::string> only;
};

struct verify_options {
  int players = 2;
  int levels = 3;
  bool exhaustive = false;
  std::optional<std::size_t> samples;
  std::uint64_t seed = 42;
  bool unit = false;
  std::optional<std::string> law;
};

namespace detail {

inline void emit(std::ostream& out, const record& r) { out << r.dump() << '\n'; }

template <class Codec>
record value_list(const Codec& codec, std::span<const typename Codec::scale_type::value_type> values) {
  record out = record::array();
  for (const auto& a : values) out.push_back(codec.format(a));
  return out;
}

template <class Codec, class Table>
record table_record(const Codec& codec, const subset_codec& subsets, const Table& table) {
  record out = record::object();
  for (player_set A : display_order(subsets.players())) out[subsets.format(A)] = codec.format(table[A]);
  return out;
}

inline record player_list(const subset_codec& subsets, const std::vector<int>& players) {
  record out = record::array();
  for (int p : players) out.push_back(subsets.player_name(p));
  return out;
}

inline rational to_number(const scale_value<rational>& a) {
  return a.is_negative() ? rational(-a.magnitude()) : a.magnitude();
}

inline std::vector<rational> to_numbers(std::span<const scale_value<rational>> f) {
  std::vector<rational> out;
  for (const auto& a : f) out.push_back(to_number(a));
  return out;
}

inline std::string choquet_unavailable(const problem<levels_codec>&) {
  return "the Choquet integrals need the unit scale";
}

inline std::string choquet_unavailable(const problem<unit_codec>&) { return {}; }

inline bool is_choquet(const std::string& name) { return name.rfind("choquet", 0) == 0; }

inline bool needs_nonnegative(const std::string& name) { return name == "choquet" || name == "sugeno"; }

/// Why `name` cannot be computed for this problem, or empty.
template <class Codec>
std::string unavailable(const problem<Codec>& pb, const std::string& name) {
  if (name == "mobius_interval") return {};
  if (!pb.f) return "the problem has no profile";
  if (is_choquet(name)) {
    if (auto why = choquet_unavailable(pb); !why.empty()) return why;
  }
  if (needs_nonnegative(name))
    for (const auto& a : *pb.f)
      if (a.is_negative()) return name + " needs a nonnegative profile";
  return {};
}

inline record choquet_record(const problem<levels_codec>&, const std::string&) { return {}; }

inline record choquet_record(const problem<unit_codec>& pb, const std::string& name) {
  const auto v = to_real(pb.v);
  const auto f = to_numbers(std::span<const scale_value<rational>>(*pb.f));
  rational value;
  if (name == "choquet")
    value = choquet(v, f);
  else if (name == "choquet_sym")
    value = choquet_symmetric(v, f);
  else
    value = choquet_asymmetric(v, f);
  const auto sorted = sort_profile(std::span<const scale_value<rational>>(*pb.f));
  record r;
  r["name"] = name;
  r["value"] = format_rational(value);
  r["diagnostics"] = {{"order", player_list(pb.subsets, sorted.order)}, {"p", sorted.split}};
  return r;
}

template <class Codec>
record mobius_interval_record(const problem<Codec>& pb, aggregation_rule rule) {
  const auto interval = ordinal_mobius_interval(pb.v);
  record value = record::object();
  for (player_set A : display_order(pb.subsets.players()))
    value[pb.subsets.format(A)] = {pb.values.format(interval.lower[A]), pb.values.format(interval.upper[A])};
  record nondegenerate = record::array();
  for (player_set A : display_order(pb.subsets.players()))
    if (interval.lower[A] != interval.upper[A]) nondegenerate.push_back(pb.subsets.format(A));
  record r;
  r["name"] = "mobius_interval";
  r["value"] = std::move(value);
  r["diagnostics"] = {{"nondegenerate", std::move(nondegenerate)}, {"rule", std::string(to_string(rule))}};
  if (rule == aggregation_rule::ceil)
    r["diagnostics"]["canonical"] = nullptr;
  else
    r["diagnostics"]["canonical"] = table_record(pb.values, pb.subsets, canonical_ordinal_mobius(pb.v.table(), rule));
  return r;
}

template <class Codec>
record compute_one(const problem<Codec>& pb, const std::string& name, mobius_representative which,
                   aggregation_rule rule) {
  using value_type = typename problem<Codec>::value_type;
  if (name == "mobius_interval") return mobius_interval_record(pb, rule);
  if (is_choquet(name)) return choquet_record(pb, name);

  std::span<const value_type> f(*pb.f);
  const auto& codec = pb.values;
  record r;
  r["name"] = name;
  if (name == "sugeno") {
    const auto sorted = sort_profile(f);
    r["value"] = codec.format(sugeno(pb.v, f));
    r["diagnostics"] = {{"order", player_list(pb.subsets, sorted.order)}};
  } else if (name == "sugeno_sym") {
    const auto terms = sorted_terms(pb.v, f);
    r["value"] = codec.format(sugeno_symmetric(pb.v, f));
    r["diagnostics"] = {{"order", player_list(pb.subsets, terms.sorted.order)},
                        {"p", terms.sorted.split},
                        {"negative_terms", value_list(codec, std::span<const value_type>(terms.negative_block))},
                        {"positive_terms", value_list(codec, std::span<const value_type>(terms.positive_block))}};
  } else if (name == "v1") {
    const auto interval = ordinal_mobius_interval(pb.v);
    const auto& m = which == mobius_representative::lower ? interval.lower : interval.upper;
    const auto terms = variant1_terms(m, f);
    r["value"] = codec.format(sugeno_variant1(m, f));
    r["diagnostics"] = {{"representative", which == mobius_representative::lower ? "lower" : "upper"},
                        {"rule", "angle"},
                        {"terms", value_list(codec, std::span<const value_type>(terms))}};
  } else {
    const bool second = name == "v2";
    const auto terms = sorted_terms(pb.v, f);
    const auto all = terms.all();
    r["value"] = codec.format(second ? sugeno_variant2(pb.v, f) : sugeno_variant3(pb.v, f));
    r["diagnostics"] = {{"order", player_list(pb.subsets, terms.sorted.order)},
                        {"p", terms.sorted.split},
                        {"rule", second ? "angle" : "ceil"},
                        {"terms", value_list(codec, std::span<const value_type>(all))}};
  }
  return r;
}

template <class Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const parse_error& e) {
    err << "error: " << e.what() << '\n';
    return parse_failure;
  } catch (const invalid_capacity& e) {
    err << "error: " << e.what() << '\n';
    return validation_failure;
  } catch (const validation_error& e) {
    err << "error: " << e.what() << '\n';
    return validation_failure;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return validation_failure;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return validation_failure;
  }
}

}  // namespace detail

/// `compute`: the requested integrals and transforms of one problem file.
///
/// With --all, outputs that do not apply (Choquet on a levels scale, the
/// nonnegative integrals on a signed profile) are reported as skipped.
/// Asking for one of them by name is a validation error. The rule picks the
/// fold of the canonical transform shown with the Moebius interval; the
/// integrals themselves fix their own rules.
inline int run_compute(const compute_options& opts, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    const any_problem parsed = load_problem(opts.input);
    return std::visit(
        [&](const auto& pb) {
          std::vector<std::string> requested;
          bool explicit_request = true;
          if (opts.all) {
            requested = output_names();
            explicit_request = false;
          } else if (!opts.only.empty()) {
            requested = opts.only;
          } else {
            requested = pb.options.outputs;
          }
          if (requested.empty()) {
            err << "error: nothing to compute; pass --all, --only or list \"outputs\" in the file\n";
            return static_cast<int>(parse_failure);
          }
          for (const auto& name : requested)
            if (std::find(output_names().begin(), output_names().end(), name) == output_names().end()) {
              err << "error: unknown output '" << name << "'\n";
              return static_cast<int>(parse_failure);
            }

          const auto which = opts.representative.value_or(pb.options.representative);
          const auto rule = opts.rule.value_or(pb.options.rule.value_or(aggregation_rule::floor));

          std::vector<record> records;
          for (const auto& name : output_names()) {
            if (std::find(requested.begin(), requested.end(), name) == requested.end()) continue;
            if (auto why = detail::unavailable(pb, name); !why.empty()) {
              if (explicit_request) throw validation_error(why);
              records.push_back({{"name", name}, {"skipped", why}});
              continue;
            }
            records.push_back(detail::compute_one(pb, name, which, rule));
          }
          for (const auto& r : records) detail::emit(out, r);
          return static_cast<int>(ok);
        },
        parsed);
  });
}

/// `mobius`: the ordinal Moebius interval, the canonical transform under the
/// chosen rule, the even/odd form, the smallest k for k-maxitivity and, on
/// the unit scale, the classical transform.
inline int run_mobius(const std::string& input, std::optional<aggregation_rule> rule_flag, std::ostream& out,
                      std::ostream& err) {
  return detail::guarded(err, [&] {
    const any_problem parsed = load_problem(input);
    return std::visit(
        [&](const auto& pb) {
          const auto rule = rule_flag.value_or(pb.options.rule.value_or(aggregation_rule::floor));
          if (rule == aggregation_rule::ceil)
            throw validation_error("the canonical transform is defined for the floor and angle rules only");
          std::vector<record> records;
          const auto interval = ordinal_mobius_interval(pb.v);
          records.push_back({{"name", "lower"}, {"value", detail::table_record(pb.values, pb.subsets, interval.lower)}});
          records.push_back({{"name", "upper"}, {"value", detail::table_record(pb.values, pb.subsets, interval.upper)}});
          const auto canonical = canonical_ordinal_mobius(pb.v.table(), rule);
          records.push_back({{"name", "canonical"},
                             {"value", detail::table_record(pb.values, pb.subsets, canonical)},
                             {"diagnostics",
                              {{"rule", std::string(to_string(rule))},
                               {"solves", is_solution(canonical, pb.v, aggregation_rule::floor)}}}});
          records.push_back(
              {{"name", "even_odd"}, {"value", detail::table_record(pb.values, pb.subsets, even_odd_mobius(pb.v))}});
          int k = 1;
          while (!is_k_maxitive(pb.v, k)) ++k;
          records.push_back({{"name", "k_maxitive"}, {"value", k}});
          if constexpr (std::is_same_v<typename std::decay_t<decltype(pb)>::codec_type, unit_codec>) {
            const auto m = classical_mobius(to_real(pb.v));
            record table = record::object();
            for (player_set A : display_order(pb.subsets.players())) table[pb.subsets.format(A)] = format_rational(m[A]);
            records.push_back({{"name", "classical"}, {"value", std::move(table)}});
          }
          for (const auto& r : records) detail::emit(out, r);
          return static_cast<int>(ok);
        },
        parsed);
  });
}

/// `verify`: runs the law suites and prints one record per law, then a
/// summary. Returns law_failure when any asserted law fails.
inline int run_verify(const verify_options& opts, std::ostream& out, std::ostream& err) {
  if (opts.players < 1 || opts.players > 6) {
    err << "error: --n must be in 1..6\n";
    return parse_failure;
  }
  if (opts.levels < 1 || opts.levels > 8) {
    err << "error: --levels must be in 1..8\n";
    return parse_failure;
  }
  if (opts.exhaustive && opts.samples) {
    err << "error: --exhaustive and --samples exclude each other\n";
    return parse_failure;
  }
  verify::config config;
  config.players = opts.players;
  config.levels = opts.levels;
  config.exhaustive = !opts.samples;
  config.samples = opts.samples.value_or(10000);
  config.seed = opts.seed;
  config.unit = opts.unit;
  if (config.exhaustive && opts.unit) {
    err << "error: --unit needs --samples\n";
    return parse_failure;
  }
  if (config.exhaustive && config.players > 3) {
    err << "error: exhaustive mode needs --n <= 3\n";
    return parse_failure;
  }

  std::vector<const verify::law*> selected;
  if (opts.law) {
    const auto* l = verify::find_law(*opts.law);
    if (!l) {
      err << "error: unknown law '" << *opts.law << "'\n";
      return parse_failure;
    }
    selected.push_back(l);
  } else {
    for (const auto& l : verify::all_laws()) selected.push_back(&l);
  }

  std::size_t failed = 0;
  for (const auto* l : selected) {
    const auto result = l->run(config);
    if (result.state == verify::status::fail) ++failed;
    record r;
    r["law"] = l->name;
    r["module"] = l->module;
    r["status"] = std::string(verify::to_string(result.state));
    r["checked"] = result.checked;
    if (!result.detail.empty()) r[result.state == verify::status::fail ? "counterexample" : "detail"] = result.detail;
    detail::emit(out, r);
  }
  record summary;
  summary["summary"] = {{"laws", selected.size()}, {"failed", failed}};
  summary["config"] = {{"n", config.players},
                       {"levels", config.levels},
                       {"mode", config.exhaustive ? "exhaustive" : "samples"},
                       {"samples", config.exhaustive ? 0 : config.samples},
                       {"seed", config.seed},
                       {"scale", config.unit ? "unit" : "levels"}};
  detail::emit(out, summary);
  return failed ? law_failure : ok;
}

}  // namespace symord::cli
