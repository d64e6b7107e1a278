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

// symord: compute symmetric Sugeno/Choquet integrals and ordinal Moebius
// transforms from problem files, and run the law suites.

#include "cli_commands.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <iostream>
#include <map>

namespace {

const std::map<std::string, symord::aggregation_rule> rule_names = {
    {"floor", symord::aggregation_rule::floor},
    {"ceil", symord::aggregation_rule::ceil},
    {"angle", symord::aggregation_rule::angle},
};

const std::map<std::string, symord::mobius_representative> representative_names = {
    {"lower", symord::mobius_representative::lower},
    {"upper", symord::mobius_representative::upper},
};

std::string lower(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symmetric ordinal aggregation: Sugeno and Choquet integrals, ordinal Moebius transforms"};
  app.require_subcommand(1);

  symord::cli::compute_options compute;
  std::string compute_rule;
  std::string compute_representative;
  auto* compute_cmd = app.add_subcommand("compute", "Evaluate integrals and transforms of a problem file");
  compute_cmd->add_option("--input", compute.input, "Problem file (JSON)")->required()->check(CLI::ExistingFile);
  auto* compute_rule_opt = compute_cmd->add_option("--rule", compute_rule, "Fold rule for the canonical transform")
                               ->check(CLI::IsMember(rule_names, CLI::ignore_case));
  auto* compute_mobius_opt =
      compute_cmd->add_option("--mobius", compute_representative, "Moebius representative for v1")
          ->check(CLI::IsMember(representative_names, CLI::ignore_case));
  auto* all_flag = compute_cmd->add_flag("--all", compute.all, "Every applicable output");
  auto* only_opt = compute_cmd->add_option("--only", compute.only, "Comma-separated outputs")->delimiter(',');
  all_flag->excludes(only_opt);

  std::string mobius_input;
  std::string mobius_rule;
  auto* mobius_cmd = app.add_subcommand("mobius", "Ordinal Moebius transforms of a capacity");
  mobius_cmd->add_option("--input", mobius_input, "Problem file (JSON)")->required()->check(CLI::ExistingFile);
  auto* mobius_rule_opt = mobius_cmd->add_option("--rule", mobius_rule, "Fold rule for the canonical transform")
                              ->check(CLI::IsMember(rule_names, CLI::ignore_case));

  symord::cli::verify_options verify;
  std::size_t samples = 0;
  std::string law;
  auto* verify_cmd = app.add_subcommand("verify", "Run the law suites");
  verify_cmd->add_option("--n", verify.players, "Number of players")->capture_default_str();
  verify_cmd->add_option("--levels", verify.levels, "Top level K of the levels scale")->capture_default_str();
  auto* exhaustive_flag = verify_cmd->add_flag("--exhaustive", verify.exhaustive, "Every capacity and profile");
  auto* samples_opt = verify_cmd->add_option("--samples", samples, "Random instances per law");
  verify_cmd->add_option("--seed", verify.seed, "Random seed")->capture_default_str();
  verify_cmd->add_flag("--unit", verify.unit, "Random instances on the unit scale");
  auto* law_opt = verify_cmd->add_option("--law", law, "Run only this law");
  exhaustive_flag->excludes(samples_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return symord::cli::parse_failure;
  }

  if (*compute_cmd) {
    if (*compute_rule_opt) compute.rule = rule_names.at(lower(compute_rule));
    if (*compute_mobius_opt) compute.representative = representative_names.at(lower(compute_representative));
    return symord::cli::run_compute(compute, std::cout, std::cerr);
  }
  if (*mobius_cmd) {
    std::optional<symord::aggregation_rule> rule;
    if (*mobius_rule_opt) rule = rule_names.at(lower(mobius_rule));
    return symord::cli::run_mobius(mobius_input, rule, std::cout, std::cerr);
  }
  if (*samples_opt) verify.samples = samples;
  if (*law_opt) verify.law = law;
  return symord::cli::run_verify(verify, std::cout, std::cerr);
}
