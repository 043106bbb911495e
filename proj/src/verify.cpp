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

#include "gth/verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "gth/hopf.hpp"
#include "gth/racks.hpp"
#include "json.hpp"

namespace gth {

using nlohmann::json;

struct ExpectedData::Impl {
  std::string path;
  json doc;
};

std::vector<std::string> ExpectedData::suite_names() const {
  std::vector<std::string> out;
  for (const auto& s : impl_->doc["suites"]) out.push_back(s["name"].get<std::string>());
  return out;
}

const std::string& ExpectedData::path() const { return impl_->path; }

std::string default_expected_path() {
  if (const char* p = std::getenv("GTH_EXPECTED_FILE"); p && *p) return p;
#ifdef GTH_DATA_DIR
  return std::string(GTH_DATA_DIR) + "/paper_expected.json";
#else
  return "data/paper_expected.json";
#endif
}

namespace {

// ---- schema ----

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  fail(ErrorKind::Data, "expected-value file: " + where + ": " + what);
}

const json& field(const json& o, const char* key, const std::string& where) {
  if (!o.is_object() || !o.contains(key)) bad(where, std::string("missing '") + key + "'");
  return o[key];
}

std::string str(const json& o, const char* key, const std::string& where) {
  const json& v = field(o, key, where);
  if (!v.is_string()) bad(where, std::string("'") + key + "' must be a string");
  return v.get<std::string>();
}

long long integer(const json& o, const char* key, const std::string& where) {
  const json& v = field(o, key, where);
  if (!v.is_number_integer()) bad(where, std::string("'") + key + "' must be an integer");
  return v.get<long long>();
}

std::vector<std::string> strings(const json& o, const char* key, const std::string& where) {
  const json& v = field(o, key, where);
  if (!v.is_array()) bad(where, std::string("'") + key + "' must be an array");
  std::vector<std::string> out;
  for (const auto& x : v) {
    if (!x.is_string()) bad(where, std::string("'") + key + "' must hold strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

std::vector<long long> integers(const json& o, const char* key, const std::string& where) {
  const json& v = field(o, key, where);
  if (!v.is_array()) bad(where, std::string("'") + key + "' must be an array");
  std::vector<long long> out;
  for (const auto& x : v) {
    if (!x.is_number_integer()) bad(where, std::string("'") + key + "' must hold integers");
    out.push_back(x.get<long long>());
  }
  return out;
}

const json& array(const json& o, const char* key, const std::string& where) {
  const json& v = field(o, key, where);
  if (!v.is_array()) bad(where, std::string("'") + key + "' must be an array");
  return v;
}

Group build_group(const std::string& spec, const std::string& where) {
  try {
    return construct(spec);
  } catch (const Error& e) {
    bad(where, "group '" + spec + "': " + e.what());
  }
}

void check_gens(const Group& G, const std::vector<std::string>& gens, const std::string& where) {
  for (const auto& g : gens) {
    if (G.find_label(g) >= 0) continue;
    try {
      G.word(g);
    } catch (const Error& e) {
      bad(where, "generator '" + g + "': " + e.what());
    }
  }
}

RowSpec row_spec(const json& r, const Group& G, const std::string& where) {
  static const std::set<std::string> kinds{"1", "nontrivial", "noninvariant", "any"};
  RowSpec s;
  s.F = strings(r, "F", where);
  s.Gamma = strings(r, "Gamma", where);
  s.alpha = str(r, "alpha", where);
  s.beta = str(r, "beta", where);
  if (!kinds.count(s.alpha) || !kinds.count(s.beta)) bad(where, "unknown cocycle kind");
  check_gens(G, s.F, where);
  check_gens(G, s.Gamma, where);
  return s;
}

void validate_table_suite(const json& s, const std::string& where) {
  Group G = build_group(str(s, "group", where), where);
  integer(s, "nontrivial_classes", where);
  std::set<std::string> ids;
  for (const auto& r : array(s, "rows", where)) {
    std::string id = str(r, "id", where);
    std::string w = where + "/" + id;
    if (!ids.insert(id).second) bad(w, "duplicate row id");
    row_spec(r, G, w);
    if (integer(r, "gh_order", w) <= 0) bad(w, "gh_order must be positive");
    build_group(str(r, "gh_type", w), w);
    if (r.contains("twist") && !r["twist"].is_boolean()) bad(w, "'twist' must be boolean");
    if (r.contains("coalgebra")) str(r, "coalgebra", w);
  }
  for (const auto& r : s["rows"])
    if (r.contains("dual_of") && !ids.count(str(r, "dual_of", where))) bad(where, "dual_of names no row");
  if (s.contains("merges"))
    for (const auto& m : array(s, "merges", where)) {
      std::string w = where + "/merge " + str(m, "into", where);
      if (!ids.count(m["into"].get<std::string>())) bad(w, "merge target names no row");
      for (const auto& r : array(m, "members", w)) row_spec(r, G, w);
    }
  if (s.contains("raw_cases"))
    for (const auto& r : array(s, "raw_cases", where)) {
      check_gens(G, strings(r, "F", where), where);
      check_gens(G, strings(r, "Gamma", where), where);
    }
  if (s.contains("isomorphism_unknown"))
    for (const auto& grp : array(s, "isomorphism_unknown", where)) {
      if (!grp.is_array()) bad(where, "isomorphism_unknown entries must be arrays");
      for (const auto& id : grp)
        if (!id.is_string() || !ids.count(id.get<std::string>())) bad(where, "unknown row in isomorphism_unknown");
    }
  if (s.contains("hopf"))
    for (const auto& h : array(s, "hopf", where)) {
      if (str(h, "kind", where) != "a18") bad(where, "unknown hopf check kind");
      long long e = integer(h, "e", where);
      if (e != 1 && e != 2) bad(where, "a18 parameter must be 1 or 2");
      integer(h, "dim", where);
      integer(h, "grouplikes", where);
      integer(h, "dual_grouplikes", where);
      build_group(str(h, "grouplikes_type", where), where);
    }
  if (s.contains("h2_outside_invariants")) {
    const json& h = s["h2_outside_invariants"];
    check_gens(G, strings(h, "subgroup", where), where);
    integer(h, "count", where);
  }
}

void validate(const json& doc) {
  if (!doc.is_object()) bad("top level", "not an object");
  if (str(doc, "format", "top level") != "gth-expected") bad("top level", "unknown format");
  if (integer(doc, "version", "top level") != 1) bad("top level", "unsupported version");
  std::set<std::string> names;
  for (const auto& s : array(doc, "suites", "top level")) {
    std::string name = str(s, "name", "suite");
    if (!names.insert(name).second) bad(name, "duplicate suite");
    str(s, "anchor", name);
    str(s, "source", name);
    if (s.contains("rows")) {
      validate_table_suite(s, name);
    } else if (s.contains("h2")) {
      for (const auto& e : array(s, "h2", name)) {
        build_group(str(e, "group", name), name);
        integers(e, "factors", name);
        str(e, "anchor", name);
      }
      integer(s, "abelian_formula_max_order", name);
    } else if (s.contains("even")) {
      integers(s, "odd", name);
      integers(s, "even", name);
      integer(s, "excluded_twist_n", name);
      const json& g = field(s, "gh_rules", name);
      for (const char* k : {"d2_half_even", "d2_half_odd", "other_quotient_even", "other_quotient_odd",
                            "twist_half_even", "twist_half_odd", "twist_dual"})
        build_group(str(g, k, name), name);
    } else if (s.contains("groups")) {
      for (const auto& g : strings(s, "groups", name)) build_group(g, name);
    } else if (s.contains("products")) {
      for (const auto& p : array(s, "products", name)) {
        str(p, "rack", name);
        str(p, "cocycle", name);
        integer(p, "hopf_dim", name);
        integer(p, "nichols_dim", name);
        integer(p, "dimension", name);
      }
    } else {
      bad(name, "unrecognised suite shape");
    }
  }
}

// ---- checks ----

struct Suite {
  std::string name, anchor;
  std::vector<CheckResult>* out;

  void add(const std::string& check, bool pass, const std::string& detail) {
    out->push_back({name, check, anchor, pass, detail});
  }
};

RowSpec spec_of(const json& r) {
  return {r["F"].get<std::vector<std::string>>(), r["Gamma"].get<std::vector<std::string>>(),
          r["alpha"].get<std::string>(), r["beta"].get<std::string>()};
}

std::string join_ints(const std::vector<int>& v) {
  std::string s = "{";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

// Compares a computed G(H) against an expected type; "" when it matches.
std::string type_mismatch(const std::optional<Group>& gh, const std::string& expected) {
  if (!gh) return "";
  Group E = construct(expected);
  if (gh->order() == E.order() && isomorphic(*gh, E)) return "";
  return "G(H) is " + identify(*gh) + ", expected " + expected;
}

bool same_case(const GTContext& ctx, int F1, int G1, int F2, int G2) {
  const auto& subs = ctx.subgroups();
  for (const auto& th : ctx.automorphisms()) {
    Subgroup a = image(subs[F1], th, ctx.group()), b = image(subs[G1], th, ctx.group());
    if ((a == subs[F2] && b == subs[G2]) || (a == subs[G2] && b == subs[F2])) return true;
  }
  return false;
}

void run_table(const json& s, Suite& suite) {
  Group G = construct(s["group"].get<std::string>());
  GTContext ctx(G);
  Classification cls = ctx.classify();
  std::vector<MergeGroup> merges;
  if (s.contains("merges"))
    for (const auto& m : s["merges"]) {
      MergeGroup mg{m["into"].get<std::string>(), {}};
      for (const auto& r : m["members"]) mg.members.push_back(resolve_row(G, spec_of(r)));
      merges.push_back(std::move(mg));
    }
  Report rep = build_report(ctx, cls, merges, false, s["group"].get<std::string>());
  ClassIndex index(ctx, cls);
  const int ncls = static_cast<int>(cls.classes.size());
  std::vector<int> pos = entry_positions(rep, ncls);

  std::map<std::string, int> row_class;
  std::set<int> covered;
  for (const auto& r : s["rows"]) {
    std::string id = r["id"].get<std::string>();
    ResolvedRow row = resolve_row(G, spec_of(r));
    std::vector<int> hit = index.match(row);
    std::ostringstream why;
    if (hit.empty()) {
      suite.add("row " + id, false, "no valid datum matches the row");
      continue;
    }
    std::set<int> entries;
    for (int c : hit) entries.insert(pos[c]);
    if (entries.size() != 1) why << "row spans classes " << join_ints(hit) << "; ";
    if (entries.count(-1)) why << "matched class is trivial; ";
    const DatumClass& c = cls.classes[hit.front()];
    row_class[id] = hit.front();
    if (pos[hit.front()] >= 0) covered.insert(pos[hit.front()]);
    long long gh = r["gh_order"].get<long long>();
    if (c.gh_order != gh) why << "|G(H)| = " << c.gh_order << ", expected " << gh << "; ";
    std::string type = r["gh_type"].get<std::string>();
    auto ghg = ctx.grouplike_group(c.rep);
    if (auto m = type_mismatch(ghg, type); !m.empty()) why << m << "; ";
    if (r.contains("twist") && c.twist != r["twist"].get<bool>())
      why << "twist flag " << c.twist << ", expected " << r["twist"].get<bool>() << "; ";
    if (r.contains("coalgebra")) {
      if (c.intersection_order != 1 || c.alpha_order != 1 || c.beta_order != 1) {
        why << "coalgebra type requested on a non-bicrossed datum; ";
      } else {
        const auto& subs = ctx.subgroups();
        HopfStructure H = bicrossed(matched_pair_from_factorization(G, subs[c.rep.Gamma], subs[c.rep.F]));
        auto blocks = coalgebra_type(H);
        long long sum = 0;
        for (int d : blocks) sum += 1LL * d * d;
        std::string got = block_string(blocks);
        if (got != r["coalgebra"].get<std::string>())
          why << "coalgebra " << got << ", expected " << r["coalgebra"].get<std::string>() << "; ";
        if (sum != H.dim) why << "block dimensions sum to " << sum << "; ";
      }
    }
    std::string detail = why.str();
    std::ostringstream note;
    note << "class " << hit.front() << ", |G(H)| = " << c.gh_order;
    if (ghg) note << " (" << identify(*ghg) << ")";
    else note << " (order only)";
    suite.add("row " + id, detail.empty(), detail.empty() ? note.str() : detail);
  }

  for (const auto& r : s["rows"]) {
    if (!r.contains("dual_of")) continue;
    std::string id = r["id"].get<std::string>(), other = r["dual_of"].get<std::string>();
    if (!row_class.count(id) || !row_class.count(other)) {
      suite.add("dual " + id + " ~ " + other, false, "a row did not match");
      continue;
    }
    int a = row_class[id], b = row_class[other];
    bool ok = pos[cls.classes[a].dual_of] == pos[b] && pos[cls.classes[b].dual_of] == pos[a];
    suite.add("dual " + id + " ~ " + other, ok, ok ? "" : "dual classes differ");
  }

  int nontrivial = 0;
  for (const auto& e : rep.classes) nontrivial += !e.trivial();
  long long want = s["nontrivial_classes"].get<long long>();
  suite.add("non-trivial class count", nontrivial == want,
            "computed " + std::to_string(nontrivial) + " (raw " +
                std::to_string(std::count_if(cls.classes.begin(), cls.classes.end(),
                                             [](const DatumClass& c) { return !c.triv.trivial(); })) +
                "), expected " + std::to_string(want));
  std::vector<int> missing;
  for (size_t e = 0; e < rep.classes.size(); ++e)
    if (!covered.count(static_cast<int>(e))) missing.push_back(rep.classes[e].classes.front());
  bool bijective = missing.empty() && covered.size() == s["rows"].size();
  suite.add("rows biject onto non-trivial classes", bijective,
            missing.empty() ? (bijective ? "" : "two rows share a class")
                            : "unmatched classes " + join_ints(missing));

  if (s.contains("merges"))
    for (const auto& m : s["merges"]) {
      std::string into = m["into"].get<std::string>();
      std::ostringstream why;
      std::set<long long> orders;
      for (const auto& r : m["members"]) {
        auto hit = index.match(resolve_row(G, spec_of(r)));
        if (hit.size() != 1) {
          why << "member matches " << hit.size() << " classes; ";
          continue;
        }
        const DatumClass& c = cls.classes[hit.front()];
        if (c.triv.trivial()) why << "member class " << hit.front() << " is trivial; ";
        orders.insert(c.gh_order);
      }
      if (orders.size() > 1) why << "members disagree on |G(H)|; ";
      suite.add("merge into " + into, why.str().empty(), why.str());
    }

  if (s.contains("raw_cases")) {
    const auto& raws = cls.raw_cases;
    std::vector<bool> used(raws.size(), false);
    std::ostringstream why;
    for (const auto& rc : s["raw_cases"]) {
      int F = ctx.index_of(resolve_subgroup(G, rc["F"].get<std::vector<std::string>>()));
      int Gm = ctx.index_of(resolve_subgroup(G, rc["Gamma"].get<std::vector<std::string>>()));
      bool found = false;
      for (size_t i = 0; i < raws.size() && !found; ++i)
        if (!used[i] && same_case(ctx, F, Gm, raws[i].F, raws[i].Gamma)) used[i] = found = true;
      if (!found)
        why << "case " << subgroup_string(G, ctx.subgroups()[F]) << " x "
            << subgroup_string(G, ctx.subgroups()[Gm]) << " not enumerated; ";
    }
    for (size_t i = 0; i < raws.size(); ++i)
      if (!used[i])
        why << "extra case " << subgroup_string(G, ctx.subgroups()[raws[i].F]) << " x "
            << subgroup_string(G, ctx.subgroups()[raws[i].Gamma]) << "; ";
    suite.add("raw case list", why.str().empty(),
              why.str().empty() ? std::to_string(raws.size()) + " cases" : why.str());
  }

  if (s.contains("isomorphism_unknown"))
    for (const auto& grp : s["isomorphism_unknown"]) {
      std::set<long long> orders;
      std::string ids;
      for (const auto& id : grp) {
        ids += (ids.empty() ? "" : ", ") + id.get<std::string>();
        if (row_class.count(id.get<std::string>())) orders.insert(cls.classes[row_class[id.get<std::string>()]].gh_order);
      }
      suite.add("undecided isomorphism {" + ids + "} shares |G(H)|", orders.size() == 1,
                "isomorphism itself is not decided");
    }

  if (s.contains("h2_outside_invariants")) {
    const json& h = s["h2_outside_invariants"];
    int M = ctx.index_of(resolve_subgroup(G, h["subgroup"].get<std::vector<std::string>>()));
    const CohomologyGroup& hm = ctx.h2(M);
    int outside = 0;
    for (long long i = 0; i < hm.size(); ++i) {
      auto v = hm.vector_at(i);
      bool inv = true;
      for (int g = 0; g < G.order() && inv; ++g) {
        int to = -1;
        auto w = ctx.conjugate_class(M, v, g, &to);
        inv = to == M && w == v;
      }
      outside += !inv;
    }
    long long want_out = h["count"].get<long long>();
    suite.add("H2 classes outside the ad-invariants", outside == want_out,
              "computed " + std::to_string(outside) + " of " + std::to_string(hm.size()) +
                  ", expected " + std::to_string(want_out));
  }

  if (s.contains("hopf"))
    for (const auto& h : s["hopf"]) {
      int e = h["e"].get<int>();
      std::ostringstream why;
      HopfStructure H = bicrossed(a18_matched_pair(e));
      if (H.dim != h["dim"].get<int>()) why << "dimension " << H.dim << "; ";
      HopfCheck hc = verify_hopf(H);
      if (!hc.ok) why << "axioms: " << hc.failure << "; ";
      GroupLikes g = grouplikes(H);
      if (g.group.order() != h["grouplikes"].get<int>()) why << "|G(H)| = " << g.group.order() << "; ";
      if (auto m = type_mismatch(g.group, h["grouplikes_type"].get<std::string>()); !m.empty()) why << m << "; ";
      HopfStructure D = dual(H);
      HopfCheck dc = verify_hopf(D);
      if (!dc.ok) why << "dual axioms: " << dc.failure << "; ";
      int gd = grouplikes(D).group.order();
      if (gd != h["dual_grouplikes"].get<int>()) why << "|G(H*)| = " << gd << "; ";
      suite.add("A18 bicrossed product, xi = zeta_3^" + std::to_string(e), why.str().empty(), why.str());
    }
}

std::vector<int> prime_power_parts(const std::vector<int>& cyclic) {
  std::vector<int> out;
  for (int d : cyclic)
    for (auto [p, k] : factorize(d)) {
      int q = 1;
      for (int i = 0; i < k; ++i) q *= p;
      out.push_back(q);
    }
  std::sort(out.begin(), out.end());
  return out;
}

void abelian_shapes(int max_order, std::vector<int>& cur, long long prod,
                    std::vector<std::vector<int>>& out) {
  if (!cur.empty()) out.push_back(cur);
  for (int d = 2; prod * d <= max_order; ++d) {
    if (!cur.empty() && d % cur.back() != 0) continue;
    cur.push_back(d);
    abelian_shapes(max_order, cur, prod * d, out);
    cur.pop_back();
  }
}

void run_h2(const json& s, Suite& suite) {
  for (const auto& e : s["h2"]) {
    std::string spec = e["group"].get<std::string>();
    Group G = construct(spec);
    CohomologyGroup h(G, G.order());
    std::vector<int> want;
    for (auto f : e["factors"]) want.push_back(f.get<int>());
    auto got = h.invariant_factors();
    std::string detail = "computed " + join_ints(got) + ", expected " + join_ints(want);
    bool ok = got == want;
    if (auto cat = catalog_h2(G); cat && *cat != got) {
      ok = false;
      detail += "; closed form gives " + join_ints(*cat);
    }
    suite.add("H2(" + spec + ")", ok, detail);
  }
  int max_order = s["abelian_formula_max_order"].get<int>();
  std::vector<std::vector<int>> shapes;
  std::vector<int> cur;
  abelian_shapes(max_order, cur, 1, shapes);
  std::ostringstream why;
  for (const auto& sh : shapes) {
    std::string spec;
    for (int d : sh) spec += (spec.empty() ? "C " : " x C ") + std::to_string(d);
    Group G = construct(spec);
    CohomologyGroup h(G, G.order());
    std::vector<int> formula;
    for (size_t i = 0; i < sh.size(); ++i)
      for (size_t j = i + 1; j < sh.size(); ++j) formula.push_back(static_cast<int>(gcd64(sh[i], sh[j])));
    std::vector<int> got = h.factors();
    std::sort(got.begin(), got.end());
    if (got != prime_power_parts(formula)) why << spec << " gives " << join_ints(got) << "; ";
  }
  suite.add("abelian product formula up to order " + std::to_string(max_order), why.str().empty(),
            why.str().empty() ? std::to_string(shapes.size()) + " groups" : why.str());
}

int count_nontrivial(const Classification& c) {
  return static_cast<int>(std::count_if(c.classes.begin(), c.classes.end(),
                                        [](const DatumClass& d) { return !d.triv.trivial(); }));
}

std::vector<int> divisors(int n) {
  std::vector<int> d;
  for (int i = 1; i <= n; ++i)
    if (n % i == 0) d.push_back(i);
  return d;
}

void run_dihedral(const json& s, Suite& suite) {
  for (auto nj : s["odd"]) {
    int n = nj.get<int>();
    GTContext ctx(construct("D " + std::to_string(n)));
    int k = count_nontrivial(ctx.classify());
    suite.add("D" + std::to_string(n) + " has only trivial data", k == 0,
              std::to_string(k) + " non-trivial classes");
  }
  const json& rules = s["gh_rules"];
  auto rule = [&](int n, int dF) -> std::string {
    if (dF == 2) return rules[(n / 2) % 2 == 0 ? "d2_half_even" : "d2_half_odd"].get<std::string>();
    return rules[(n / dF) % 2 == 0 ? "other_quotient_even" : "other_quotient_odd"].get<std::string>();
  };
  auto allowed = [](int n, int d) { return d != 2 || (d != n && d != n / 2); };

  std::vector<int> ns;
  for (auto nj : s["even"]) ns.push_back(nj.get<int>());
  const int excluded = s["excluded_twist_n"].get<int>();
  for (int n : ns) {
    const std::string tag = "D" + std::to_string(n);
    Group G = construct("D " + std::to_string(n));
    GTContext ctx(G);
    Classification cls = ctx.classify();
    ClassIndex index(ctx, cls);
    auto rk_s = [&](int k) { return G.mul(G.pow(G.word("r"), k), G.word("s")); };
    auto rd = [&](int d) { return G.pow(G.word("r"), d); };
    const Subgroup M = generate(G, {rd(n / 2), G.word("s")});
    auto Fsub = [&](int d, int k) { return generate(G, {rd(d), rk_s(k)}); };
    auto Gsub = [&](int e) { return generate(G, {rd(e), G.word("s")}); };

    // Factorization conditions as predicates over every parameter triple.
    std::ostringstream pw;
    int triples = 0;
    for (int d : divisors(n))
      for (int k = 0; k < d; ++k)
        for (int e : divisors(n)) {
          ++triples;
          Subgroup F = Fsub(d, k), Gm = Gsub(e);
          bool fact = product_size(F, Gm) == G.order();
          Subgroup I = intersect(F, Gm);
          bool exact = fact && I.order() == 1;
          bool withM = fact && I == M;
          bool p2 = gcd64(d, e) == 2 && lcm64(d, e) == n && k % 2 == 1;
          bool p3 = gcd64(d, e) == 1 && lcm64(d, e) == n / 2 && k % d == 0;
          if (exact != p2) pw << "(d,k,e)=(" << d << "," << k << "," << e << ") exact=" << exact << "; ";
          if (withM != p3) pw << "(d,k,e)=(" << d << "," << k << "," << e << ") meets in M=" << withM << "; ";
        }
    suite.add(tag + " factorization conditions", pw.str().empty(),
              pw.str().empty() ? std::to_string(triples) + " parameter triples" : pw.str());

    // Restriction of the non-trivial global class.
    const CohomologyGroup& hg = ctx.h2_global();
    std::vector<int> gv;
    for (long long i = 0; i < hg.size(); ++i)
      if (!hg.is_trivial(hg.vector_at(i))) gv = hg.vector_at(i);
    std::ostringstream rw;
    int restricted = 0;
    if (gv.empty()) rw << "H2(D_n) is trivial; ";
    else
      for (int d : divisors(n)) {
        if ((n / d) % 2) continue;
        for (int k = 0; k < d; ++k) {
          int F = ctx.index_of(Fsub(d, k));
          ++restricted;
          if (ctx.h2(F).is_trivial(ctx.restrict_class(ctx.whole_index(), gv, F)))
            rw << "trivial on <r^" << d << ", r^" << k << " s>; ";
        }
      }
    suite.add(tag + " restriction to <r^d, r^k s> with n/d even", rw.str().empty(),
              rw.str().empty() ? std::to_string(restricted) + " subgroups" : rw.str());

    // Table rows instantiated for this n.
    struct Instance {
      std::string row;
      Subgroup F, Gamma;
      std::string alpha, beta, gh;
    };
    std::vector<Instance> inst;
    for (int d : divisors(n))
      for (int e : divisors(n)) {
        if (!allowed(n, d) || !allowed(n, e)) continue;
        for (int k = 0; k < d; ++k) {
          if (gcd64(d, e) == 2 && lcm64(d, e) == n && k % 2 == 1) {
            inst.push_back({"tres", Fsub(d, k), Gsub(e), "1", "1", rule(n, d)});
            inst.push_back({"tres-dual", Gsub(e), Fsub(d, k), "1", "1", rule(n, e)});
          }
          if (d != 1 && e != 1 && gcd64(d, e) == 1 && lcm64(d, e) == n / 2 && k % d == 0) {
            inst.push_back({"cuatro", Fsub(d, k), Gsub(e), "nontrivial", "1", rule(n, d)});
            inst.push_back({"cuatro-dual", Gsub(e), Fsub(d, k), "1", "nontrivial", rule(n, e)});
          }
        }
      }
    if (n != excluded) {
      inst.push_back({"uno", M, whole(G), "nontrivial", "1",
                      rules[(n / 2) % 2 == 0 ? "twist_half_even" : "twist_half_odd"].get<std::string>()});
      inst.push_back({"uno-dual", whole(G), M, "1", "nontrivial", rules["twist_dual"].get<std::string>()});
    }
    std::ostringstream tw, gw;
    std::set<int> hit_all;
    for (const auto& in : inst) {
      auto hit = index.match({in.F, in.Gamma, in.alpha, in.beta});
      std::string where = in.row + " " + subgroup_string(G, in.F) + " x " + subgroup_string(G, in.Gamma);
      if (hit.empty()) {
        tw << where << ": no valid datum; ";
        continue;
      }
      Group E = construct(in.gh);
      for (int c : hit) {
        hit_all.insert(c);
        const DatumClass& dc = cls.classes[c];
        if (dc.triv.trivial()) tw << where << ": trivial; ";
        if (dc.gh_order != E.order())
          gw << where << ": |G(H)| = " << dc.gh_order << ", expected " << E.order() << "; ";
        if (in.alpha == "1")
          if (auto m = type_mismatch(ctx.grouplike_group(dc.rep), in.gh); !m.empty()) gw << where << ": " << m << "; ";
      }
    }
    for (size_t c = 0; c < cls.classes.size(); ++c)
      if (!cls.classes[c].triv.trivial() && !hit_all.count(static_cast<int>(c)))
        tw << "class " << c << " (" << subgroup_string(G, ctx.subgroups()[cls.classes[c].rep.F]) << ", "
           << subgroup_string(G, ctx.subgroups()[cls.classes[c].rep.Gamma]) << ") not in the table; ";
    suite.add(tag + " table rows cover the non-trivial classes", tw.str().empty(),
              tw.str().empty() ? std::to_string(inst.size()) + " row instances, " +
                                     std::to_string(count_nontrivial(cls)) + " non-trivial classes"
                               : tw.str());
    suite.add(tag + " G(H) column", gw.str().empty(), gw.str());
  }

  // The twisting row excludes n = excluded: there the datum is trivial.
  {
    int n = excluded;
    Group G = construct("D " + std::to_string(n));
    GTContext ctx(G);
    Classification cls = ctx.classify();
    ClassIndex index(ctx, cls);
    Subgroup M = generate(G, {G.pow(G.word("r"), n / 2), G.word("s")});
    auto hit = index.match({M, whole(G), "nontrivial", "any"});
    bool ok = !hit.empty();
    for (int c : hit) ok = ok && cls.classes[c].triv.trivial();
    suite.add("D" + std::to_string(n) + " twisting datum on <r^(n/2), s> is trivial", ok,
              std::to_string(hit.size()) + " classes");
  }
}

void run_negative(const json& s, Suite& suite) {
  for (const auto& g : s["groups"]) {
    std::string spec = g.get<std::string>();
    GTContext ctx(construct(spec));
    int k = count_nontrivial(ctx.classify());
    suite.add(spec + " has only trivial data", k == 0, std::to_string(k) + " non-trivial classes");
  }
}

void run_bosonization(const json& s, Suite& suite) {
  for (const auto& p : s["products"]) {
    std::string rack = p["rack"].get<std::string>(), coc = p["cocycle"].get<std::string>();
    long long hd = p["hopf_dim"].get<long long>(), nd = p["nichols_dim"].get<long long>(),
              dim = p["dimension"].get<long long>();
    std::ostringstream why;
    try {
      const CatalogEntry& e = catalog_lookup(rack, coc);
      if (e.nichols_dim != nd) why << "catalog Nichols dimension " << e.nichols_dim << "; ";
      int order = construct(e.group).order();
      if (order != hd) why << "realizing group has order " << order << "; ";
      long long b = bosonization_dimension(rack, coc, hd);
      if (b != dim) why << "computed " << b << "; ";
    } catch (const Error& err) {
      why << err.what();
    }
    if (nd * hd != dim) why << nd << " * " << hd << " != " << dim << "; ";
    suite.add(std::to_string(nd) + " * " + std::to_string(hd) + " = " + std::to_string(dim),
              why.str().empty(), why.str());
  }
}

}  // namespace

ExpectedData load_expected(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Data, "cannot read expected-value file " + path);
  auto impl = std::make_shared<ExpectedData::Impl>();
  impl->path = path;
  try {
    impl->doc = json::parse(in);
  } catch (const json::exception& e) {
    fail(ErrorKind::Data, "expected-value file " + path + " is not valid JSON: " + e.what());
  }
  validate(impl->doc);
  return ExpectedData(impl);
}

std::vector<MergeGroup> merges_for(const ExpectedData& data, const Group& G) {
  for (const auto& s : data.impl().doc["suites"]) {
    if (!s.contains("merges")) continue;
    Group S = construct(s["group"].get<std::string>());
    if (S.order() != G.order()) continue;
    auto iso = isomorphism(S, G);
    if (!iso) continue;
    std::vector<MergeGroup> out;
    for (const auto& m : s["merges"]) {
      MergeGroup mg{m["into"].get<std::string>(), {}};
      for (const auto& r : m["members"]) mg.members.push_back(resolve_row(S, spec_of(r), &*iso, &G));
      out.push_back(std::move(mg));
    }
    return out;
  }
  return {};
}

bool VerifyReport::ok() const { return failures() == 0; }

int VerifyReport::failures() const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.pass; }));
}

VerifyReport verify_paper(const ExpectedData& data, const std::vector<std::string>& only) {
  VerifyReport out;
  std::set<std::string> wanted(only.begin(), only.end()), seen;
  for (const auto& s : data.impl().doc["suites"]) {
    std::string name = s["name"].get<std::string>();
    if (!wanted.empty() && !wanted.count(name)) continue;
    seen.insert(name);
    Suite suite{name, s["anchor"].get<std::string>(), &out.checks};
    try {
      if (s.contains("rows")) run_table(s, suite);
      else if (s.contains("h2")) run_h2(s, suite);
      else if (s.contains("even")) run_dihedral(s, suite);
      else if (s.contains("groups")) run_negative(s, suite);
      else if (s.contains("products")) run_bosonization(s, suite);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::Data) throw;
      suite.add("suite completed", false, e.what());
    }
  }
  for (const auto& w : wanted)
    if (!seen.count(w)) out.warnings.push_back("no suite named '" + w + "'");
  if (out.checks.empty()) out.warnings.push_back("filter selected no checks; vacuous pass");
  return out;
}

std::string verify_text(const VerifyReport& r) {
  std::ostringstream os;
  for (const auto& w : r.warnings) os << "warning: " << w << "\n";
  for (const auto& c : r.checks) {
    os << (c.pass ? "PASS " : "FAIL ") << c.suite << ": " << c.name;
    if (!c.detail.empty()) os << " [" << c.detail << "]";
    os << "\n";
  }
  os << "summary: " << r.checks.size() << " checks, " << r.failures() << " failed\n";
  return os.str();
}

std::string verify_json(const VerifyReport& r, const std::string& stamp) {
  json j;
  j["checks"] = json::array();
  for (const auto& c : r.checks)
    j["checks"].push_back(
        {{"suite", c.suite}, {"name", c.name}, {"anchor", c.anchor}, {"pass", c.pass}, {"detail", c.detail}});
  j["warnings"] = r.warnings;
  j["failed"] = r.failures();
  j["total"] = static_cast<int>(r.checks.size());
  if (!stamp.empty()) j["stamp"] = stamp;
  return j.dump(2) + "\n";
}

}  // namespace gth
