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

#include "cli_commands.hpp"

#include <symord/problem.hpp>
#include <symord/rational.hpp>
#include <symord/text_format.hpp>

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

namespace {

using namespace symord;
namespace fs = std::filesystem;

class TempFile {
 public:
  explicit TempFile(const std::string& content) {
    static int counter = 0;
    path_ = fs::temp_directory_path() / ("symord_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) + ".json");
    std::ofstream(path_) << content;
  }
  ~TempFile() { fs::remove(path_); }
  std::string path() const { return path_.string(); }

 private:
  fs::path path_;
};

const char* worked_example = R"({
  "scale": {"kind": "unit"},
  "n": 3,
  "capacity": {"{}": "0", "{1}": "0.3", "{2}": "0.25", "{3}": "0.2",
               "{1,2}": "0.4", "{1,3}": "0.3", "{2,3}": "0.6", "{1,2,3}": "1"},
  "profile": ["-1", "0.3", "1"]
})";

struct run_result {
  int code;
  std::vector<nlohmann::json> records;
  std::string out;
  std::string err;
};

run_result compute(const std::string& content, cli::compute_options opts) {
  TempFile file(content);
  opts.input = file.path();
  std::ostringstream out, err;
  int code = cli::run_compute(opts, out, err);
  run_result r{code, {}, out.str(), err.str()};
  std::istringstream lines(r.out);
  for (std::string line; std::getline(lines, line);) r.records.push_back(nlohmann::json::parse(line));
  return r;
}

const nlohmann::json* find(const run_result& r, const std::string& name) {
  for (const auto& rec : r.records)
    if (rec.value("name", "") == name) return &rec;
  return nullptr;
}

TEST(Rational, ParseAndFormat) {
  EXPECT_EQ(parse_rational("0.25"), rational(1, 4));
  EXPECT_EQ(parse_rational("-0.3"), rational(-3, 10));
  EXPECT_EQ(parse_rational("+2.50"), rational(5, 2));
  EXPECT_EQ(parse_rational("3/10"), rational(3, 10));
  EXPECT_EQ(parse_rational("007"), rational(7));
  EXPECT_EQ(parse_rational(".5"), rational(1, 2));
  for (const char* bad : {"", "-", "1e3", "0.1.2", "1/0", "a", "1/", "0x10"})
    EXPECT_THROW(parse_rational(bad), std::invalid_argument) << bad;
  EXPECT_EQ(format_rational(rational(1, 4)), "0.25");
  EXPECT_EQ(format_rational(rational(-3, 10)), "-0.3");
  EXPECT_EQ(format_rational(rational(1, 3)), "1/3");
  EXPECT_EQ(format_rational(rational(-2)), "-2");
  EXPECT_EQ(format_rational(rational(1, 40)), "0.025");
}

TEST(Rational, RoundTrip) {
  for (int d = 1; d <= 40; ++d)
    for (int k = -d; k <= d; ++k) {
      const rational x(k, d);
      ASSERT_EQ(parse_rational(format_rational(x)), x);
    }
}

TEST(Codecs, LevelsLabels) {
  const levels_codec codec({"none", "weak", "good"});
  EXPECT_EQ(codec.parse("good"), levels_scale(2).at(2));
  EXPECT_EQ(codec.parse("-weak"), levels_scale(2).at(-1));
  EXPECT_EQ(codec.format(levels_scale(2).at(-2)), "-good");
  EXPECT_EQ(codec.format(levels_scale(2).at(0)), "none");
  EXPECT_THROW(codec.parse("great"), parse_error);
  EXPECT_THROW(levels_codec({"a", "a"}), parse_error);
}

TEST(Codecs, Subsets) {
  const subset_codec names(3);
  EXPECT_EQ(names.parse("{1,3}"), player_set({1, 3}));
  EXPECT_EQ(names.parse("{ 2 }"), player_set({2}));
  EXPECT_EQ(names.parse("{}"), player_set{});
  EXPECT_EQ(names.format(player_set({3, 1})), "{1,3}");
  for (const char* bad : {"1,3", "{4}", "{1,1}", "{0}", "{x}"}) EXPECT_THROW(names.parse(bad), parse_error) << bad;
}

TEST(Problem, RejectsMalformedInput) {
  EXPECT_THROW(parse_problem_text("{"), parse_error);
  EXPECT_THROW(parse_problem_text("[]"), parse_error);
  EXPECT_THROW(parse_problem_text(R"({"scale": {"kind": "reals"}, "n": 1, "capacity": {}})"), parse_error);
  EXPECT_THROW(parse_problem_text(R"({"scale": {"kind": "unit"}, "n": 1, "capacity": {"{}": 0.0, "{1}": "1"}})"),
               parse_error);
}

TEST(Problem, RejectsInvalidCapacity) {
  EXPECT_THROW(parse_problem_text(R"({"scale": {"kind": "unit"}, "n": 2,
      "capacity": {"{}": "0", "{1}": "0.5", "{2}": "0.2", "{1,2}": "0.4"}})"),
               invalid_capacity);
}

TEST(Compute, WorkedExampleAll) {
  cli::compute_options opts;
  opts.all = true;
  const auto r = compute(worked_example, opts);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ((*find(r, "sugeno_sym"))["value"], "0");
  EXPECT_EQ((*find(r, "v1"))["value"], "0.25");
  EXPECT_EQ((*find(r, "v2"))["value"], "0.2");
  EXPECT_EQ((*find(r, "v3"))["value"], "0.2");
  EXPECT_TRUE(find(r, "sugeno")->contains("skipped"));
  const auto& interval = (*find(r, "mobius_interval"))["value"];
  EXPECT_EQ(interval["{1,3}"], nlohmann::json::array({"0", "0.3"}));
  EXPECT_EQ(interval["{2,3}"], nlohmann::json::array({"0.6", "0.6"}));
  // Every emitted value parses back.
  for (const auto& rec : r.records) {
    if (rec.contains("value") && rec["value"].is_string()) {
      const auto text = rec["value"].get<std::string>();
      EXPECT_EQ(format_rational(parse_rational(text)), text);
    }
  }
}

TEST(Compute, OutputIsDeterministic) {
  cli::compute_options opts;
  opts.all = true;
  EXPECT_EQ(compute(worked_example, opts).out, compute(worked_example, opts).out);
}

TEST(Compute, ChoquetOnLevelsIsAValidationError) {
  cli::compute_options opts;
  opts.only = {"choquet_sym"};
  const auto r = compute(R"({"scale": {"kind": "levels", "k": 2}, "n": 2,
      "capacity": {"{}": "0", "{1}": "1", "{2}": "1", "{1,2}": "2"}, "profile": ["1", "-2"]})",
                         opts);
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("unit"), std::string::npos) << r.err;
}

TEST(Compute, NonMonotoneCapacityNamesTheEdge) {
  cli::compute_options opts;
  opts.all = true;
  const auto r = compute(R"({"scale": {"kind": "unit"}, "n": 2,
      "capacity": {"{}": "0", "{1}": "0.5", "{2}": "0.2", "{1,2}": "1"}, "profile": ["1", "0"]})",
                         opts);
  EXPECT_EQ(r.code, 0);
  const auto bad = compute(R"({"scale": {"kind": "unit"}, "n": 3,
      "capacity": {"{}": "0", "{1}": "0.5", "{2}": "0", "{3}": "0", "{1,2}": "0.4", "{1,3}": "0.5",
                   "{2,3}": "0", "{1,2,3}": "1"}, "profile": ["1", "0", "0"]})",
                           opts);
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("{1} -> {1,2}"), std::string::npos) << bad.err;
}

TEST(Compute, ParseErrorsExitOne) {
  cli::compute_options opts;
  opts.all = true;
  EXPECT_EQ(compute("{ not json", opts).code, 1);
  cli::compute_options unknown;
  unknown.only = {"median"};
  EXPECT_EQ(compute(worked_example, unknown).code, 1);
  EXPECT_EQ(compute(worked_example, cli::compute_options{}).code, 1);
}

TEST(Compute, NegativeProfileRejectsPlainSugeno) {
  cli::compute_options opts;
  opts.only = {"sugeno"};
  EXPECT_EQ(compute(worked_example, opts).code, 2);
}

TEST(Mobius, WorkedExample) {
  TempFile file(worked_example);
  std::ostringstream out, err;
  ASSERT_EQ(cli::run_mobius(file.path(), std::nullopt, out, err), 0) << err.str();
  EXPECT_NE(out.str().find("\"lower\""), std::string::npos);
  std::ostringstream out2, err2;
  EXPECT_EQ(cli::run_mobius(file.path(), aggregation_rule::ceil, out2, err2), 2);
}

TEST(Verify, AngleMonotonicIsExpectedFail) {
  cli::verify_options opts;
  opts.law = "angle-monotonic";
  std::ostringstream out, err;
  EXPECT_EQ(cli::run_verify(opts, out, err), 0);
  const auto first = nlohmann::json::parse(out.str().substr(0, out.str().find('\n')));
  EXPECT_EQ(first["status"], "expected-fail");
  EXPECT_TRUE(first.contains("detail"));
}

TEST(Verify, SampledRunsAreReproducible) {
  cli::verify_options opts;
  opts.players = 3;
  opts.exhaustive = false;
  opts.samples = 200;
  opts.law = "symmetry";
  std::ostringstream a, b, err;
  cli::run_verify(opts, a, err);
  cli::run_verify(opts, b, err);
  EXPECT_EQ(a.str(), b.str());
}

TEST(Verify, FlagValidation) {
  std::ostringstream out, err;
  cli::verify_options big;
  big.players = 4;
  EXPECT_EQ(cli::run_verify(big, out, err), 1);
  cli::verify_options unknown;
  unknown.law = "no-such-law";
  EXPECT_EQ(cli::run_verify(unknown, out, err), 1);
}

}  // namespace
