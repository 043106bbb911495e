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

#include "gth/commands.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <map>
#include <sstream>

#include "gth/hopf.hpp"
#include "gth/racks.hpp"
#include "gth/verify.hpp"
#include "json.hpp"

namespace gth {

using nlohmann::json;

namespace {

std::string utc_stamp() {
  std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

const std::string& arg(const CommandRequest& req, size_t i, const char* what) {
  if (i >= req.args.size()) fail(ErrorKind::Parse, req.verb + ": missing " + what);
  return req.args[i];
}

void expect_args(const CommandRequest& req, size_t lo, size_t hi) {
  if (req.args.size() < lo || req.args.size() > hi)
    fail(ErrorKind::Parse, req.verb + ": wrong number of arguments");
}

std::string with_stamp_text(const CommandRequest& req, std::string body) {
  return req.stamp ? "# generated " + utc_stamp() + "\n" + body : body;
}

std::string dump(json j, const CommandRequest& req) {
  if (req.stamp) j["stamp"] = utc_stamp();
  return j.dump(2) + "\n";
}

std::vector<std::string> split_gens(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  for (auto& g : out) {
    auto b = g.find_first_not_of(' '), e = g.find_last_not_of(' ');
    g = b == std::string::npos ? "" : g.substr(b, e - b + 1);
  }
  return out;
}

std::string factors_string(const std::vector<int>& f) {
  if (f.empty()) return "1";
  std::string s;
  for (int d : f) s += (s.empty() ? "C" : " x C") + std::to_string(d);
  return s;
}

CommandResult cmd_classify(const CommandRequest& req) {
  expect_args(req, 1, 1);
  const std::string& spec = req.args[0];
  Group G = construct(spec);
  GTContext ctx(G);
  ExpectedData data = load_expected(default_expected_path());
  Report r = build_report(ctx, ctx.classify(req.all), merges_for(data, G), req.all, spec);
  if (req.json) return {0, report_json(r, req.stamp ? utc_stamp() : "")};
  if (req.markdown) return {0, with_stamp_text(req, report_markdown(r))};
  return {0, with_stamp_text(req, report_text(r))};
}

CommandResult cmd_h2(const CommandRequest& req) {
  expect_args(req, 1, 1);
  const std::string& spec = req.args[0];
  Group G = construct(spec);
  std::vector<int> inv, parts;
  std::string mode = "exhaustive";
  auto closed = catalog_h2(G);
  if (G.order() > 60 && closed) {
    inv = *closed;
    mode = "closed form";
  } else {
    CohomologyGroup h(G, G.order());
    inv = h.invariant_factors();
    parts = h.factors();
  }
  if (req.json) {
    json j{{"group", spec}, {"order", G.order()}, {"invariant_factors", inv}, {"mode", mode},
           {"trivial", inv.empty()}};
    if (mode == "exhaustive") j["prime_power_factors"] = parts;
    return {0, dump(j, req)};
  }
  std::ostringstream os;
  os << "group: " << spec << " (order " << G.order() << ")\n";
  os << "H^2(G, k^x) = " << factors_string(inv) << " (" << mode << ")\n";
  return {0, with_stamp_text(req, os.str())};
}

CommandResult cmd_subgroups(const CommandRequest& req) {
  expect_args(req, 1, 1);
  const std::string& spec = req.args[0];
  Group G = construct(spec);
  std::vector<Subgroup> subs = all_subgroups(G);
  auto classes = conjugacy_partition(G, subs);
  json rows = json::array();
  std::ostringstream os;
  os << "group: " << spec << " (order " << G.order() << "), " << subs.size() << " subgroups in "
     << classes.size() << " conjugacy classes\n\n";
  os << "| order | generators | conjugates | normal | abelian | type |\n|---|---|---|---|---|---|\n";
  for (const auto& cl : classes) {
    const Subgroup& s = subs[cl.front()];
    std::string type = identify(subgroup_group(G, s));
    bool normal = is_normal(G, s), ab = is_abelian(G, s);
    rows.push_back({{"order", s.order()},
                    {"generators", subgroup_string(G, s)},
                    {"conjugates", cl.size()},
                    {"normal", normal},
                    {"abelian", ab},
                    {"type", type}});
    os << "| " << s.order() << " | " << subgroup_string(G, s) << " | " << cl.size() << " | "
       << (normal ? "yes" : "no") << " | " << (ab ? "yes" : "no") << " | " << type << " |\n";
  }
  if (req.json) return {0, dump({{"group", spec}, {"order", G.order()}, {"classes", rows}}, req)};
  return {0, with_stamp_text(req, os.str())};
}

CommandResult cmd_factorizations(const CommandRequest& req) {
  expect_args(req, 1, 1);
  const std::string& spec = req.args[0];
  Group G = construct(spec);
  GTContext ctx(G);
  const auto& subs = ctx.subgroups();
  const auto& auts = ctx.automorphisms();
  std::map<std::pair<int, int>, int> reps;
  for (auto [F, Gm] : ctx.factorizations()) {
    if (!req.all && (F == ctx.trivial_index() || Gm == ctx.trivial_index())) continue;
    std::pair<int, int> best{F, Gm};
    for (const auto& th : auts)
      best = std::min(best, {ctx.index_of(image(subs[F], th, G)), ctx.index_of(image(subs[Gm], th, G))});
    ++reps[best];
  }
  json rows = json::array();
  std::ostringstream os;
  os << "group: " << spec << " (order " << G.order() << "), " << reps.size()
     << " ordered factorizations up to automorphism\n\n";
  os << "| F | Γ | F∩Γ | exact |\n|---|---|---|---|\n";
  for (const auto& [p, count] : reps) {
    int I = intersect(subs[p.first], subs[p.second]).order();
    rows.push_back({{"F", subgroup_string(G, subs[p.first])},
                    {"F_order", subs[p.first].order()},
                    {"Gamma", subgroup_string(G, subs[p.second])},
                    {"Gamma_order", subs[p.second].order()},
                    {"intersection_order", I},
                    {"exact", I == 1}});
    os << "| " << subgroup_string(G, subs[p.first]) << " | " << subgroup_string(G, subs[p.second]) << " | "
       << I << " | " << (I == 1 ? "yes" : "no") << " |\n";
  }
  if (req.json) return {0, dump({{"group", spec}, {"order", G.order()}, {"factorizations", rows}}, req)};
  return {0, with_stamp_text(req, os.str())};
}

CommandResult cmd_hopf(const CommandRequest& req) {
  expect_args(req, 2, 3);
  MatchedPairData mp;
  std::string name;
  if (req.args.size() == 2) {
    if (req.args[0] != "A18") fail(ErrorKind::Parse, "hopf: expected 'A18 <e>' or '<group> <F> <Gamma>'");
    int e = 0;
    try {
      e = std::stoi(req.args[1]);
    } catch (...) {
      fail(ErrorKind::Parse, "hopf: A18 parameter must be 1 or 2");
    }
    if (e != 1 && e != 2) fail(ErrorKind::Parse, "hopf: A18 parameter must be 1 or 2");
    mp = a18_matched_pair(e);
    name = "A18, xi = zeta_3^" + std::to_string(e);
  } else {
    Group G = construct(req.args[0]);
    Subgroup F = resolve_subgroup(G, split_gens(req.args[1]));
    Subgroup Gm = resolve_subgroup(G, split_gens(req.args[2]));
    // Datum (F, 1, Gamma, 1) with F and Gamma meeting trivially.
    mp = matched_pair_from_factorization(G, Gm, F);
    name = "datum (F, 1, Gamma, 1) over " + req.args[0] + ", F = " + subgroup_string(G, F) +
           ", Gamma = " + subgroup_string(G, Gm);
  }
  HopfStructure H = bicrossed(mp);
  HopfCheck hc = verify_hopf(H);
  HopfStructure D = dual(H);
  HopfCheck dc = verify_hopf(D);
  GroupLikes g = grouplikes(H), gd = grouplikes(D);
  std::string alg = block_string(algebra_type(H)), coalg = block_string(coalgebra_type(H));
  bool ss = is_semisimple(H);
  int code = hc.ok && dc.ok ? 0 : 1;
  if (req.json) {
    json j{{"name", name},
           {"dim", H.dim},
           {"axioms", hc.ok ? "ok" : hc.failure},
           {"dual_axioms", dc.ok ? "ok" : dc.failure},
           {"grouplikes_order", g.group.order()},
           {"grouplikes_type", identify(g.group)},
           {"dual_grouplikes_order", gd.group.order()},
           {"dual_grouplikes_type", identify(gd.group)},
           {"algebra_type", alg},
           {"coalgebra_type", coalg},
           {"semisimple", ss}};
    if (req.all) j["structure"] = json::parse(hopf_to_json(H));
    return {code, dump(j, req)};
  }
  std::ostringstream os;
  os << name << "\n";
  os << "dimension: " << H.dim << "\n";
  os << "Hopf axioms: " << (hc.ok ? "exact, all hold" : "FAILED " + hc.failure) << "\n";
  os << "dual Hopf axioms: " << (dc.ok ? "exact, all hold" : "FAILED " + dc.failure) << "\n";
  os << "G(H): order " << g.group.order() << ", " << identify(g.group) << "\n";
  os << "G(H*): order " << gd.group.order() << ", " << identify(gd.group) << "\n";
  os << "algebra type: " << alg << "\n";
  os << "coalgebra type: " << coalg << "\n";
  os << "semisimple: " << (ss ? "yes" : "no") << "\n";
  return {code, with_stamp_text(req, os.str())};
}

CommandResult cmd_rack(const CommandRequest& req) {
  expect_args(req, 1, 1);
  const std::string& name = req.args[0];
  if (name == "catalog") {
    json rows = json::array();
    std::ostringstream os;
    os << "| rack | cocycle | Nichols dim | group | Hopf dim | bosonization |\n|---|---|---|---|---|---|\n";
    for (const auto& e : catalog()) {
      int order = construct(e.group).order();
      long long b = bosonization_dimension(e.rack, e.cocycle, order);
      rows.push_back({{"rack", e.rack},
                      {"cocycle", e.cocycle},
                      {"nichols_dim", e.nichols_dim},
                      {"group", e.group},
                      {"hopf_dim", order},
                      {"bosonization_dim", b},
                      {"partner", e.partner}});
      os << "| " << e.rack << " | " << e.cocycle << " | " << e.nichols_dim << " | " << e.group << " | "
         << order << " | " << b << " |\n";
    }
    if (req.json) return {0, dump({{"catalog", rows}}, req)};
    return {0, with_stamp_text(req, os.str())};
  }
  Rack X = rack_by_name(name);
  auto bad = check_rack(X);
  bool quandle = is_quandle(X);
  std::string fp = rack_fingerprint(X);
  std::vector<const CatalogEntry*> entries;
  for (const auto& e : catalog())
    if (e.rack == name) entries.push_back(&e);
  if (req.json) {
    json j = json::parse(rack_to_json(X));
    j["name"] = name;
    j["axioms"] = bad ? *bad : "ok";
    j["quandle"] = quandle;
    j["fingerprint"] = fp;
    j["catalog"] = json::array();
    for (auto* e : entries)
      j["catalog"].push_back({{"cocycle", e->cocycle}, {"nichols_dim", e->nichols_dim}, {"group", e->group}});
    return {bad ? 1 : 0, dump(j, req)};
  }
  std::ostringstream os;
  os << "rack: " << name << " (" << X.provenance << ")\n";
  os << "size: " << X.size << "\n";
  os << "axioms: " << (bad ? "FAILED " + *bad : "hold") << "\n";
  os << "quandle: " << (quandle ? "yes" : "no") << "\n";
  os << "translation cycle types: " << fp << "\n";
  for (auto* e : entries)
    os << "catalog: cocycle " << e->cocycle << ", Nichols dimension " << e->nichols_dim << ", over " << e->group
       << "\n";
  if (req.all) {
    os << "\n";
    for (int x = 0; x < X.size; ++x) {
      for (int y = 0; y < X.size; ++y) os << (y ? " " : "") << X.act(x, y);
      os << "\n";
    }
  }
  return {bad ? 1 : 0, with_stamp_text(req, os.str())};
}

CommandResult cmd_verify(const CommandRequest& req) {
  expect_args(req, 0, 0);
  ExpectedData data = load_expected(default_expected_path());
  std::vector<std::string> only;
  for (const auto& o : req.only)
    for (const auto& part : split_gens(o)) only.push_back(part);
  VerifyReport r = verify_paper(data, only);
  int code = r.ok() ? 0 : 1;
  if (req.json) return {code, verify_json(r, req.stamp ? utc_stamp() : "")};
  return {code, with_stamp_text(req, verify_text(r))};
}

}  // namespace

const std::vector<std::string>& command_verbs() {
  static const std::vector<std::string> v{"classify", "h2", "subgroups", "factorizations", "hopf", "rack",
                                          "verify-paper"};
  return v;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse:
    case ErrorKind::Invalid:
      return 2;
    case ErrorKind::Limit:
    case ErrorKind::Data:
    case ErrorKind::Internal:
      return 3;
  }
  return 3;
}

CommandResult run_command(const CommandRequest& req) {
  if (req.json && req.markdown) fail(ErrorKind::Parse, "--json and --markdown are exclusive");
  if (req.threads < 0) fail(ErrorKind::Parse, "--threads must be non-negative");
  if (req.threads > 0) set_thread_count(req.threads);
  if (req.verb == "classify") return cmd_classify(req);
  if (req.verb == "h2") return cmd_h2(req);
  if (req.verb == "subgroups") return cmd_subgroups(req);
  if (req.verb == "factorizations") return cmd_factorizations(req);
  if (req.verb == "hopf") return cmd_hopf(req);
  if (req.verb == "rack") return cmd_rack(req);
  if (req.verb == "verify-paper") return cmd_verify(req);
  fail(ErrorKind::Parse, "unknown verb '" + req.verb + "'");
}

}  // namespace gth
