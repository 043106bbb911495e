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

#include <map>
#include <string>
#include <vector>

#include "gth/gt_data.hpp"

namespace gth {

// A datum pattern: generators (labels or words) of F and Gamma plus cocycle
// kinds "1", "nontrivial", "noninvariant" or "any".
struct RowSpec {
  std::vector<std::string> F, Gamma;
  std::string alpha = "1", beta = "1";
};

struct ResolvedRow {
  Subgroup F, Gamma;
  std::string alpha = "1", beta = "1";
};

// Subgroup generated by the given labels or words.
Subgroup resolve_subgroup(const Group& G, const std::vector<std::string>& gens);
// Resolves in `source`, then maps into the target group along iso when given.
ResolvedRow resolve_row(const Group& source, const RowSpec& row, const GroupMap* iso = nullptr,
                        const Group* target = nullptr);

// Valid data on (F, Gamma) whose classes have the requested kinds.
std::vector<GTDatum> data_matching(const GTContext& ctx, int F, int Gamma, const std::string& alpha,
                                   const std::string& beta);

// Maps data to the index of their class in a classification.
class ClassIndex {
 public:
  ClassIndex(const GTContext& ctx, const Classification& cls);
  int of(const GTDatum& d) const;
  // Sorted distinct classes hit by the data matching a row.
  std::vector<int> match(const ResolvedRow& row) const;

 private:
  const GTContext* ctx_;
  std::map<std::vector<int>, int> by_canonical_;
};

// Classes collapsed into one report entry.
struct MergeGroup {
  std::string name;
  std::vector<ResolvedRow> members;
};

struct ReportEntry {
  std::vector<int> classes;  // classification indices, representative first
  std::string merge_name;
  std::string F, Gamma;
  int F_order = 0, Gamma_order = 0, intersection_order = 0;
  int alpha_order = 1, beta_order = 1;
  long long gh_order = 0;
  std::string gh_type;
  bool cocommutative = false, commutative = false, twist = false, abelian_extension = false;
  int dual_of = -1;  // entry position, -1 when the dual is not listed
  bool trivial() const { return cocommutative || commutative; }
};

struct RawCaseEntry {
  std::string F, Gamma;
  int F_order = 0, Gamma_order = 0, intersection_order = 0;
  bool has_nontrivial = false;
};

struct Report {
  std::string group;
  int order = 0;
  bool all = false;
  std::vector<ReportEntry> classes;
  std::vector<RawCaseEntry> raw_cases;
  std::vector<std::string> merges_applied;
};

// "<g1,g2>" from a minimal generating set.
std::string subgroup_string(const Group& G, const Subgroup& s);

// Entries in classification order; trivial classes only when `all`.
// Throws Data when a merge member matches no class.
Report build_report(const GTContext& ctx, const Classification& cls,
                    const std::vector<MergeGroup>& merges, bool all, const std::string& name);
// Position of the entry holding each classification index, -1 if filtered.
std::vector<int> entry_positions(const Report& r, int class_count);

std::string report_json(const Report& r, const std::string& stamp);
std::string report_markdown(const Report& r);
std::string report_text(const Report& r);

}  // namespace gth
