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

#pragma once

#include <memory>
#include <string>
#include <vector>

#include "gth/report.hpp"

namespace gth {

// Parsed and schema-checked expected-value file.
class ExpectedData {
 public:
  struct Impl;
  explicit ExpectedData(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  const Impl& impl() const { return *impl_; }
  std::vector<std::string> suite_names() const;
  const std::string& path() const;

 private:
  std::shared_ptr<const Impl> impl_;
};

// GTH_EXPECTED_FILE when set, else the data file shipped with the sources.
std::string default_expected_path();
// Throws ErrorKind::Data on unreadable, malformed or schema-violating files.
ExpectedData load_expected(const std::string& path);

// Merge groups of the suite whose group is isomorphic to G, transported to G.
std::vector<MergeGroup> merges_for(const ExpectedData& data, const Group& G);

struct CheckResult {
  std::string suite, name, anchor;
  bool pass = false;
  std::string detail;  // computed-vs-expected on failure, notes otherwise
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  std::vector<std::string> warnings;
  bool ok() const;
  int failures() const;
};

// Runs the suites named in `only` (all when empty); unknown names warn.
VerifyReport verify_paper(const ExpectedData& data, const std::vector<std::string>& only);

std::string verify_text(const VerifyReport& r);
std::string verify_json(const VerifyReport& r, const std::string& stamp);

}  // namespace gth
