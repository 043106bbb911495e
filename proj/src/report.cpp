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

#include "gth/report.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "json.hpp"

namespace gth {

namespace {

int element_of(const Group& G, const std::string& s) {
  int i = G.find_label(s);
  return i >= 0 ? i : G.word(s);
}

bool kind_matches(const GTContext& ctx, int sub, const std::vector<int>& v,
                  const std::string& kind) {
  const CohomologyGroup& h = ctx.h2(sub);
  if (kind == "any") return true;
  if (kind == "1") return h.is_trivial(v);
  if (kind == "nontrivial") return !h.is_trivial(v);
  if (kind == "noninvariant") {
    const Subgroup& S = ctx.subgroups()[sub];
    for (int g : normalizer(ctx.group(), S).members) {
      int to = -1;
      if (ctx.conjugate_class(sub, v, g, &to) != v) return true;
    }
    return false;
  }
  fail(ErrorKind::Data, "unknown cocycle kind '" + kind + "'");
}

std::vector<int> canonical_key(const GTContext& ctx, const GTDatum& d) {
  GTDatum c = ctx.canonical(d);
  std::vector<int> k{c.F, c.Gamma};
  k.insert(k.end(), c.alpha.begin(), c.alpha.end());
  k.push_back(-1);
  k.insert(k.end(), c.beta.begin(), c.beta.end());
  return k;
}

std::string cocycle_cell(int order) {
  return order == 1 ? "1" : "≠ 1 (order " + std::to_string(order) + ")";
}

}  // namespace

Subgroup resolve_subgroup(const Group& G, const std::vector<std::string>& gens) {
  std::vector<int> g;
  for (const auto& s : gens) g.push_back(element_of(G, s));
  return generate(G, g);
}

ResolvedRow resolve_row(const Group& source, const RowSpec& row, const GroupMap* iso,
                        const Group* target) {
  ResolvedRow r;
  r.F = resolve_subgroup(source, row.F);
  r.Gamma = resolve_subgroup(source, row.Gamma);
  if (iso) {
    r.F = image(r.F, *iso, *target);
    r.Gamma = image(r.Gamma, *iso, *target);
  }
  r.alpha = row.alpha;
  r.beta = row.beta;
  return r;
}

std::vector<GTDatum> data_matching(const GTContext& ctx, int F, int Gamma, const std::string& alpha,
                                   const std::string& beta) {
  std::vector<GTDatum> out;
  const CohomologyGroup &hf = ctx.h2(F), &hg = ctx.h2(Gamma);
  for (long long a = 0; a < hf.size(); ++a) {
    std::vector<int> va = hf.vector_at(a);
    if (!kind_matches(ctx, F, va, alpha)) continue;
    for (long long b = 0; b < hg.size(); ++b) {
      GTDatum d{F, Gamma, va, hg.vector_at(b)};
      if (!kind_matches(ctx, Gamma, d.beta, beta)) continue;
      if (ctx.is_valid(d)) out.push_back(std::move(d));
    }
  }
  return out;
}

ClassIndex::ClassIndex(const GTContext& ctx, const Classification& cls) : ctx_(&ctx) {
  for (size_t i = 0; i < cls.classes.size(); ++i)
    by_canonical_[canonical_key(ctx, cls.classes[i].rep)] = static_cast<int>(i);
}

int ClassIndex::of(const GTDatum& d) const {
  auto it = by_canonical_.find(canonical_key(*ctx_, d));
  if (it == by_canonical_.end()) fail(ErrorKind::Internal, "datum outside the classification");
  return it->second;
}

std::vector<int> ClassIndex::match(const ResolvedRow& row) const {
  int F = ctx_->index_of(row.F), Gamma = ctx_->index_of(row.Gamma);
  std::set<int> hit;
  for (const auto& d : data_matching(*ctx_, F, Gamma, row.alpha, row.beta)) hit.insert(of(d));
  return {hit.begin(), hit.end()};
}

std::string subgroup_string(const Group& G, const Subgroup& s) {
  std::string out = "<";
  auto gens = min_generating_set(G, s);
  for (size_t i = 0; i < gens.size(); ++i) {
    if (i) out += ",";
    out += G.label(gens[i]);
  }
  return out + ">";
}

Report build_report(const GTContext& ctx, const Classification& cls,
                    const std::vector<MergeGroup>& merges, bool all, const std::string& name) {
  const Group& G = ctx.group();
  const int n = static_cast<int>(cls.classes.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  std::vector<std::string> merge_name(n);
  Report r;
  r.group = name;
  r.order = G.order();
  r.all = all;
  if (!merges.empty()) {
    ClassIndex index(ctx, cls);
    for (const auto& m : merges) {
      std::vector<int> hit;
      for (const auto& row : m.members)
        for (int c : index.match(row)) hit.push_back(c);
      if (hit.empty()) fail(ErrorKind::Data, "merge '" + m.name + "' matches no class");
      for (int c : hit) parent[find(c)] = find(hit.front());
      merge_name[find(hit.front())] = m.name;
      r.merges_applied.push_back(m.name);
    }
  }
  // Representative of a merged block: its least class index.
  std::vector<std::vector<int>> blocks(n);
  for (int i = 0; i < n; ++i) blocks[find(i)].push_back(i);
  std::vector<int> entry_of_block(n, -1);
  for (int i = 0; i < n; ++i) {
    const auto& b = blocks[find(i)];
    if (b.front() != i) continue;
    const DatumClass& c = cls.classes[i];
    if (!all && c.triv.trivial()) continue;
    ReportEntry e;
    e.classes = b;
    e.merge_name = merge_name[find(i)];
    e.F = subgroup_string(G, ctx.subgroups()[c.rep.F]);
    e.Gamma = subgroup_string(G, ctx.subgroups()[c.rep.Gamma]);
    e.F_order = c.F_order;
    e.Gamma_order = c.Gamma_order;
    e.intersection_order = c.intersection_order;
    e.alpha_order = c.alpha_order;
    e.beta_order = c.beta_order;
    e.gh_order = c.gh_order;
    e.gh_type = c.gh_type;
    e.cocommutative = c.triv.cocommutative;
    e.commutative = c.triv.commutative;
    e.twist = c.twist;
    e.abelian_extension = c.abelian_extension;
    entry_of_block[find(i)] = static_cast<int>(r.classes.size());
    r.classes.push_back(std::move(e));
  }
  for (auto& e : r.classes) e.dual_of = entry_of_block[find(cls.classes[e.classes.front()].dual_of)];
  for (const auto& rc : cls.raw_cases) {
    RawCaseEntry e;
    e.F = subgroup_string(G, ctx.subgroups()[rc.F]);
    e.Gamma = subgroup_string(G, ctx.subgroups()[rc.Gamma]);
    e.F_order = ctx.subgroups()[rc.F].order();
    e.Gamma_order = ctx.subgroups()[rc.Gamma].order();
    e.intersection_order = rc.intersection_order;
    e.has_nontrivial = rc.has_nontrivial;
    r.raw_cases.push_back(std::move(e));
  }
  return r;
}

std::vector<int> entry_positions(const Report& r, int class_count) {
  std::vector<int> pos(class_count, -1);
  for (size_t e = 0; e < r.classes.size(); ++e)
    for (int c : r.classes[e].classes) pos[c] = static_cast<int>(e);
  return pos;
}

std::string report_json(const Report& r, const std::string& stamp) {
  nlohmann::json j;
  j["group"] = r.group;
  j["order"] = r.order;
  j["listing"] = r.all ? "all" : "nontrivial";
  j["classes"] = nlohmann::json::array();
  for (const auto& e : r.classes) {
    nlohmann::json c;
    c["F"] = e.F;
    c["F_order"] = e.F_order;
    c["Gamma"] = e.Gamma;
    c["Gamma_order"] = e.Gamma_order;
    c["alpha"] = e.alpha_order == 1 ? "1" : "nontrivial";
    c["alpha_order"] = e.alpha_order;
    c["beta"] = e.beta_order == 1 ? "1" : "nontrivial";
    c["beta_order"] = e.beta_order;
    c["intersection_order"] = e.intersection_order;
    c["gh_order"] = e.gh_order;
    c["gh_type"] = e.gh_type.empty() ? nlohmann::json(nullptr) : nlohmann::json(e.gh_type);
    c["trivial"] = e.trivial();
    c["cocommutative"] = e.cocommutative;
    c["commutative"] = e.commutative;
    c["twist"] = e.twist;
    c["abelian_extension"] = e.abelian_extension;
    c["dual_of"] = e.dual_of < 0 ? nlohmann::json(nullptr) : nlohmann::json(e.dual_of);
    c["merged_classes"] = static_cast<int>(e.classes.size());
    if (!e.merge_name.empty()) c["merge"] = e.merge_name;
    j["classes"].push_back(std::move(c));
  }
  j["raw_cases"] = nlohmann::json::array();
  for (const auto& rc : r.raw_cases)
    j["raw_cases"].push_back({{"F", rc.F},
                              {"Gamma", rc.Gamma},
                              {"F_order", rc.F_order},
                              {"Gamma_order", rc.Gamma_order},
                              {"intersection_order", rc.intersection_order},
                              {"has_nontrivial", rc.has_nontrivial}});
  j["merges_applied"] = r.merges_applied;
  if (!stamp.empty()) j["stamp"] = stamp;
  return j.dump(2) + "\n";
}

std::string report_markdown(const Report& r) {
  std::ostringstream os;
  os << "| # | F | α | Γ | β | G(H) |\n|---|---|---|---|---|---|\n";
  for (size_t i = 0; i < r.classes.size(); ++i) {
    const auto& e = r.classes[i];
    std::string gh = e.gh_type.empty() ? "order " + std::to_string(e.gh_order) : e.gh_type;
    os << "| " << i + 1 << " | " << e.F << " | " << cocycle_cell(e.alpha_order) << " | " << e.Gamma
       << " | " << cocycle_cell(e.beta_order) << " | " << gh << " |\n";
  }
  return os.str();
}

std::string report_text(const Report& r) {
  std::ostringstream os;
  int nontrivial = 0;
  for (const auto& e : r.classes) nontrivial += !e.trivial();
  os << "group: " << r.group << " (order " << r.order << ")\n";
  os << "classes listed: " << r.classes.size() << " (" << nontrivial << " non-trivial)\n";
  os << "raw (F, Gamma) cases: " << r.raw_cases.size() << "\n";
  for (const auto& m : r.merges_applied) os << "merged: " << m << "\n";
  os << "\n" << report_markdown(r);
  return os.str();
}

}  // namespace gth
