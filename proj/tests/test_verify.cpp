// Copyright 2026 <authors>
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

#include <cstdio>
#include <fstream>
#include <random>
#include <set>

#include "doctest.h"
#include "gth/verify.hpp"
#include "json.hpp"
#include "test_util.hpp"

using namespace gth;

namespace {

const ExpectedData& expected() {
  static ExpectedData d = load_expected(default_expected_path());
  return d;
}

Report classify_report(const Group& G, bool all) {
  GTContext ctx(G);
  return build_report(ctx, ctx.classify(all), merges_for(expected(), G), all, "test");
}

std::string write_temp(const std::string& name, const std::string& text) {
  std::string path = "/tmp/gth_test_" + name + ".json";
  std::ofstream(path) << text;
  return path;
}

std::string shipped_text() {
  std::ifstream in(default_expected_path());
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_CASE("S4 report after merges") {
  Report r = classify_report(construct("S 4"), false);
  REQUIRE(r.classes.size() == 4);
  std::multiset<std::string> types;
  for (const auto& e : r.classes) {
    CHECK_FALSE(e.trivial());
    REQUIRE(e.dual_of >= 0);
    CHECK(r.classes[e.dual_of].dual_of == &e - r.classes.data());
    types.insert(e.gh_type);
  }
  CHECK(types == std::multiset<std::string>{"C2", "C2 x C2", "D4", "S3"});
  CHECK(r.raw_cases.size() == 7);
  CHECK(r.merges_applied.size() == 4);
}

TEST_CASE("merges follow a relabelled group") {
  std::mt19937_64 rng(test_seed("merge relabel"));
  Group G = shuffled(construct("S 4"), rng);
  CHECK(classify_report(G, false).classes.size() == 4);
  Group C = shuffled(construct("C 7 : 3 : C 6"), rng);
  Report rc = classify_report(C, false);
  REQUIRE(rc.classes.size() == 2);
  CHECK(rc.classes[0].dual_of == 1);
}

TEST_CASE("groups without a suite are reported unmerged") {
  Report r = classify_report(construct("D 6"), false);
  CHECK(r.classes.size() == 4);
  CHECK(r.merges_applied.empty());
}

TEST_CASE("empty report is a header-only table") {
  Report r = classify_report(construct("S 3"), false);
  CHECK(r.classes.empty());
  CHECK(report_markdown(r) == "| # | F | α | Γ | β | G(H) |\n|---|---|---|---|---|---|\n");
  Report all = classify_report(construct("S 3"), true);
  CHECK(all.classes.size() == 4);
}

TEST_CASE("report JSON follows the schema and is stable") {
  Report r = classify_report(construct("A 4 x C 2"), true);
  std::string a = report_json(r, ""), b = report_json(classify_report(construct("A 4 x C 2"), true), "");
  CHECK(a == b);
  auto j = nlohmann::json::parse(a);
  CHECK(j.at("group").is_string());
  CHECK(j.at("order") == 24);
  CHECK(j.at("listing") == "all");
  CHECK(j.at("merges_applied").is_array());
  REQUIRE(j.at("classes").size() == r.classes.size());
  int twists = 0;
  for (const auto& c : j.at("classes")) {
    for (const char* k : {"F", "Gamma", "alpha", "beta"}) CHECK(c.at(k).is_string());
    for (const char* k : {"F_order", "Gamma_order", "intersection_order", "gh_order", "alpha_order",
                          "beta_order", "merged_classes"})
      CHECK(c.at(k).is_number_integer());
    for (const char* k : {"trivial", "cocommutative", "commutative", "twist", "abelian_extension"})
      CHECK(c.at(k).is_boolean());
    CHECK((c.at("gh_type").is_string() || c.at("gh_type").is_null()));
    CHECK((c.at("dual_of").is_number_integer() || c.at("dual_of").is_null()));
    CHECK(c.at("trivial") == (c.at("cocommutative").get<bool>() || c.at("commutative").get<bool>()));
    if (c.at("twist").get<bool>() && !c.at("trivial").get<bool>()) ++twists;
  }
  CHECK(twists == 2);
  for (const auto& rc : j.at("raw_cases")) {
    CHECK(rc.at("F").is_string());
    CHECK(rc.at("has_nontrivial").is_boolean());
  }
  CHECK(nlohmann::json::parse(report_json(r, "2026-01-01T00:00:00Z")).at("stamp") == "2026-01-01T00:00:00Z");
}

TEST_CASE("row matching") {
  GTContext ctx(construct("S 5"));
  Classification cls = ctx.classify();
  ClassIndex index(ctx, cls);
  const Group& G = ctx.group();
  auto hit = index.match(resolve_row(G, {{"(45)", "(24)(35)"}, {"(12345)", "(345)"}, "nontrivial", "1"}));
  REQUIRE(hit.size() == 1);
  auto same = index.match(resolve_row(G, {{"(45)", "(24)(35)"}, {"(12345)", "(345)"}, "1", "nontrivial"}));
  CHECK(same == hit);
  CHECK(cls.classes[hit[0]].gh_order == 4);
  CHECK(index.match(resolve_row(G, {{"(12)"}, {"(12)", "(13)"}, "1", "1"})).empty());
}

TEST_CASE("corrupted expected-value files are hard errors") {
  std::string text = shipped_text();
  auto expect_data_error = [](const std::string& path) {
    try {
      load_expected(path);
      FAIL("accepted " << path);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Data);
    }
  };
  expect_data_error(write_temp("truncated", text.substr(0, text.size() / 2)));
  expect_data_error("/nonexistent/gth_expected.json");
  auto j = nlohmann::json::parse(text);
  auto mutate = [&](const char* name, auto fn) {
    auto copy = j;
    fn(copy);
    expect_data_error(write_temp(name, copy.dump()));
  };
  mutate("version", [](nlohmann::json& d) { d["version"] = 7; });
  mutate("label", [](nlohmann::json& d) { d["suites"][4]["rows"][0]["F"][0] = "(99)"; });
  mutate("kind", [](nlohmann::json& d) { d["suites"][4]["rows"][0]["alpha"] = "sometimes"; });
  mutate("order", [](nlohmann::json& d) { d["suites"][4]["rows"][0]["gh_order"] = "four"; });
  mutate("group", [](nlohmann::json& d) { d["suites"][1]["group"] = "Q 8 8"; });
  mutate("dual", [](nlohmann::json& d) { d["suites"][4]["rows"][1]["dual_of"] = "nowhere"; });
  mutate("shape", [](nlohmann::json& d) { d["suites"].push_back({{"name", "x"}, {"anchor", "a"}, {"source", "s"}}); });
}

TEST_CASE("altered expected values fail verification") {
  auto j = nlohmann::json::parse(shipped_text());
  for (auto& s : j["suites"])
    if (s["name"] == "s4") s["rows"][0]["gh_order"] = 5;
  ExpectedData d = load_expected(write_temp("altered", j.dump()));
  VerifyReport r = verify_paper(d, {"s4"});
  CHECK_FALSE(r.ok());
  CHECK(r.failures() == 1);
}

TEST_CASE("verify filters") {
  VerifyReport none = verify_paper(expected(), {"no-such-suite"});
  CHECK(none.ok());
  CHECK(none.checks.empty());
  CHECK(none.warnings.size() == 2);
  VerifyReport s4 = verify_paper(expected(), {"s4"});
  CHECK(s4.ok());
  for (const auto& c : s4.checks) CHECK(c.suite == "s4");
  CHECK(verify_text(s4) == verify_text(verify_paper(expected(), {"s4"})));
}
