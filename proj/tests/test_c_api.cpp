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

// Links only the shared C library.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstring>
#include <initializer_list>
#include <vector>
#include <string>

#include "doctest.h"
#include "gth/gth_c.h"

namespace {

std::string run(const char* verb, std::initializer_list<const char*> args, unsigned flags,
                gth_status* status) {
  std::vector<const char*> a(args);
  gth_result* r = nullptr;
  *status = gth_run(verb, a.data(), static_cast<int>(a.size()), flags, nullptr, 0, 0, &r);
  REQUIRE(r != nullptr);
  CHECK(gth_result_status(r) == *status);
  std::string out = gth_result_output(r);
  gth_result_free(r);
  return out;
}

}  // namespace

TEST_CASE("status names and exit codes") {
  CHECK(std::strlen(gth_version()) > 0);
  CHECK(gth_exit_code(GTH_OK) == 0);
  CHECK(gth_exit_code(GTH_MISMATCH) == 1);
  CHECK(gth_exit_code(GTH_E_PARSE) == 2);
  CHECK(gth_exit_code(GTH_E_INVALID) == 2);
  CHECK(gth_exit_code(GTH_E_ARGUMENT) == 2);
  CHECK(gth_exit_code(GTH_E_LIMIT) == 3);
  CHECK(gth_exit_code(GTH_E_DATA) == 3);
  CHECK(gth_exit_code(GTH_E_INTERNAL) == 3);
  CHECK(std::string(gth_status_name(GTH_E_DATA)).size() > 0);
}

TEST_CASE("group handles") {
  gth_group* g = nullptr;
  REQUIRE(gth_group_new("S 4", &g) == GTH_OK);
  CHECK(gth_group_order(g) == 24);
  CHECK(gth_group_mul(g, 0, 5) == 5);
  CHECK(std::string(gth_group_label(g, 0)) == "()");
  CHECK(gth_group_label(g, 24) == nullptr);
  int f[4] = {0};
  int count = -1;
  CHECK(gth_group_h2(g, f, 4, &count) == GTH_OK);
  CHECK(count == 1);
  CHECK(f[0] == 2);
  count = -1;
  CHECK(gth_group_h2(g, nullptr, 0, &count) == GTH_OK);
  CHECK(count == 1);
  gth_group_free(g);

  gth_group* bad = nullptr;
  CHECK(gth_group_new("Q 8 8", &bad) == GTH_E_PARSE);
  CHECK(bad == nullptr);
  CHECK(std::strlen(gth_last_error()) > 0);
  CHECK(gth_group_new(nullptr, &bad) == GTH_E_ARGUMENT);
  CHECK(gth_group_new("S 4", nullptr) == GTH_E_ARGUMENT);
}

TEST_CASE("verbs") {
  gth_status s;
  std::string text = run("classify", {"S 4"}, 0, &s);
  CHECK(s == GTH_OK);
  CHECK(text.find("D4") != std::string::npos);
  std::string json1 = run("classify", {"A 4 x C 2"}, GTH_FLAG_JSON | GTH_FLAG_ALL, &s);
  std::string json2 = run("classify", {"A 4 x C 2"}, GTH_FLAG_JSON | GTH_FLAG_ALL, &s);
  CHECK(json1 == json2);
  CHECK(json1.front() == '{');
  run("h2", {"A 5"}, 0, &s);
  CHECK(s == GTH_OK);
  run("classify", {"S 99"}, 0, &s);
  CHECK(s == GTH_E_LIMIT);
  run("no-such-verb", {}, 0, &s);
  CHECK(s == GTH_E_PARSE);
  run("classify", {"S 4"}, GTH_FLAG_JSON | GTH_FLAG_MARKDOWN, &s);
  CHECK(s == GTH_E_PARSE);
  run("hopf", {"S 4", "(1234)", "(123)"}, 0, &s);
  CHECK(s == GTH_E_INVALID);
  CHECK(gth_run(nullptr, nullptr, 0, 0, nullptr, 0, 0, nullptr) == GTH_E_ARGUMENT);
}

TEST_CASE("verify-paper filters") {
  const char* only[] = {"negative"};
  gth_result* r = nullptr;
  CHECK(gth_run("verify-paper", nullptr, 0, 0, only, 1, 0, &r) == GTH_OK);
  CHECK(std::string(gth_result_output(r)).find("summary: 2 checks, 0 failed") != std::string::npos);
  gth_result_free(r);
  const char* dn[] = {"dn"};
  CHECK(gth_run("verify-paper", nullptr, 0, 0, dn, 1, 0, &r) == GTH_MISMATCH);
  gth_result_free(r);
}
