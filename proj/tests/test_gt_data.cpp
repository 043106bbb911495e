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

#include <map>
#include <random>
#include <set>
#include <tuple>

#include "doctest.h"
#include "gth/gt_data.hpp"
#include "test_util.hpp"

using namespace gth;

namespace {

int element(const Group& G, const std::string& s) {
  int i = G.find_label(s);
  return i >= 0 ? i : G.word(s);
}

int sub(const GTContext& ctx, std::initializer_list<std::string> gens) {
  std::vector<int> g;
  for (const auto& s : gens) g.push_back(element(ctx.group(), s));
  return ctx.index_of(generate(ctx.group(), g));
}

// Valid data on (F, Gamma) whose cocycle triviality matches the flags.
std::vector<GTDatum> data_on(const GTContext& ctx, int F, int Gamma, bool alpha_nontrivial,
                             bool beta_nontrivial) {
  std::vector<GTDatum> out;
  const auto &hf = ctx.h2(F), &hg = ctx.h2(Gamma);
  for (long long a = 0; a < hf.size(); ++a)
    for (long long b = 0; b < hg.size(); ++b) {
      GTDatum d{F, Gamma, hf.vector_at(a), hg.vector_at(b)};
      if (hf.is_trivial(d.alpha) == alpha_nontrivial) continue;
      if (hg.is_trivial(d.beta) == beta_nontrivial) continue;
      if (ctx.is_valid(d)) out.push_back(d);
    }
  return out;
}

GTDatum one_datum(const GTContext& ctx, int F, int Gamma, bool a, bool b) {
  auto all = data_on(ctx, F, Gamma, a, b);
  REQUIRE(!all.empty());
  return all.front();
}

Subgroup whole_subgroup(const GTContext& ctx) { return ctx.subgroups()[ctx.whole_index()]; }

std::vector<int> zeros(size_t k) { return std::vector<int>(k, 0); }

// F-hat as value tables on the members of F, by brute force over images of a
// generating set in Z/e.
std::vector<std::vector<int>> characters(const Group& G, const Subgroup& F) {
  int e = 1;
  for (int x : F.members) e = static_cast<int>(lcm64(e, G.elem_order(x)));
  auto gens = min_generating_set(G, F);
  std::vector<std::vector<int>> out;
  std::vector<int> img(gens.size(), 0);
  for (;;) {
    std::vector<int> chi(F.order(), -1);
    chi[0] = 0;
    std::vector<int> queue{0};
    bool ok = true;
    for (size_t q = 0; q < queue.size() && ok; ++q) {
      int x = F.members[queue[q]];
      for (size_t i = 0; i < gens.size(); ++i) {
        int y = F.position(G.mul(x, gens[i]));
        int v = (chi[queue[q]] + img[i]) % e;
        if (chi[y] < 0) {
          chi[y] = v;
          queue.push_back(y);
        } else if (chi[y] != v) {
          ok = false;
        }
      }
    }
    for (int a = 0; a < F.order() && ok; ++a)
      for (int b = 0; b < F.order() && ok; ++b)
        ok = chi[F.position(G.mul(F.members[a], F.members[b]))] == (chi[a] + chi[b]) % e;
    if (ok) out.push_back(chi);
    size_t i = 0;
    while (i < img.size() && ++img[i] == e) img[i++] = 0;
    if (i == img.size()) break;
  }
  return out;
}

// F-hat x| N_G(F)/F for alpha = 1, built directly from characters and cosets.
Group semidirect_grouplikes(const Group& G, const Subgroup& F) {
  auto chars = characters(G, F);
  Subgroup N = normalizer(G, F);
  std::vector<int> reps, coset_of(G.order(), -1);
  for (int g : N.members) {
    if (coset_of[g] >= 0) continue;
    for (int f : F.members) coset_of[G.mul(g, f)] = static_cast<int>(reps.size());
    reps.push_back(g);
  }
  std::map<std::vector<int>, int> char_index;
  for (size_t i = 0; i < chars.size(); ++i) char_index[chars[i]] = static_cast<int>(i);
  const int nc = static_cast<int>(chars.size()), nk = static_cast<int>(reps.size());
  const int n = nc * nk;
  // (chi, gF)(phi, hF) = (chi + g.phi, ghF) with (g.phi)(x) = phi(g^-1 x g).
  std::vector<int> table(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int g = reps[a % nk], h = reps[b % nk];
      const auto &chi = chars[a / nk], &phi = chars[b / nk];
      std::vector<int> sum(F.order());
      int e = 1;
      for (int x : F.members) e = static_cast<int>(lcm64(e, G.elem_order(x)));
      for (int i = 0; i < F.order(); ++i)
        sum[i] = (chi[i] + phi[F.position(G.conj(G.inv(g), F.members[i]))]) % e;
      table[static_cast<size_t>(a) * n + b] =
          char_index.at(sum) * nk + coset_of[G.mul(g, h)];
    }
  // Identity is (0, F) at index 0 because the zero character is enumerated first
  // and reps[0] is the identity.
  return Group(n, std::move(table), std::vector<std::string>(n, "."), "oracle");
}

// Orbit invariants only: cocycle orders of the chosen representative shift
// under H^2(G) and are left out.
using Invariants = std::tuple<int, int, int, bool, bool, bool, long long, std::string, int>;

std::multiset<Invariants> invariant_profile(const Classification& c) {
  std::multiset<Invariants> out;
  for (const auto& k : c.classes)
    out.insert({k.F_order, k.Gamma_order, k.intersection_order, k.triv.cocommutative, k.triv.commutative, k.twist, k.gh_order, k.gh_type,
                k.orbit_size});
  return out;
}

int nontrivial_count(const Classification& c) {
  int n = 0;
  for (const auto& k : c.classes) n += !k.triv.trivial();
  return n;
}

}  // namespace

TEST_CASE("factorization examples") {
  GTContext d12(construct("D 12"));
  int F = sub(d12, {"r^4", "r s"}), Gm = sub(d12, {"r^6", "s"});
  CHECK(d12.is_factorization(F, Gm));
  CHECK(intersect(d12.subgroups()[F], d12.subgroups()[Gm]).order() == 1);
  CHECK(d12.is_factorization(d12.whole_index(), d12.whole_index()));

  // (d, e) = (3, 2) in D_12: coprime, lcm n/2, r^0 in <r^3>.
  int F2 = sub(d12, {"r^3", "s"}), G2 = sub(d12, {"r^2", "s"});
  CHECK(d12.is_factorization(F2, G2));
  Subgroup M = intersect(d12.subgroups()[F2], d12.subgroups()[G2]);
  CHECK(M == generate(d12.group(), {d12.group().word("r^6"), d12.group().word("s")}));
  CHECK(abelian_shape(d12.group(), M).factors == std::vector<int>{2, 2});

  int r = d12.index_of(generate(d12.group(), {1}));
  CHECK_FALSE(d12.is_factorization(r, sub(d12, {"r^2"})));
}

TEST_CASE("enumeration examples") {
  GTContext s3(construct("S 3"));
  auto data = s3.enumerate_data();
  CHECK(!data.empty());
  for (const auto& d : data) {
    CHECK(s3.is_abelian_extension(d));
    CHECK(s3.triviality(d).trivial());
  }
  CHECK(nontrivial_count(GTContext(construct("C 5 : 2 : C 4")).classify()) == 0);
  CHECK(nontrivial_count(GTContext(construct("C 7")).classify()) == 0);
}

TEST_CASE("orbit examples") {
  GTContext g18(construct("G18"));
  int L = sub(g18, {"x"}), N = sub(g18, {"a", "b"});
  auto betas = data_on(g18, L, N, false, true);
  CHECK(betas.size() == 2);
  std::set<std::pair<int, int>> reps;
  for (const auto& d : betas) {
    GTDatum c = g18.canonical(d);
    CHECK(g18.canonical(c) == c);
    reps.insert({c.F, c.Gamma});
  }
  CHECK(g18.canonical(betas[0]) == g18.canonical(betas[1]));

  GTContext s4(construct("S 4"));
  int V = sub(s4, {"(12)", "(34)"});
  auto twists = data_on(s4, V, s4.whole_index(), true, false);
  CHECK(!twists.empty());
  for (const auto& d : twists) CHECK(s4.canonical(d) == s4.canonical(twists[0]));

  // Identity action.
  GTDatum d = twists[0];
  CHECK(s4.act(d, identity_map(s4.group()), zeros(s4.h2_global().factors().size())) == d);
}

TEST_CASE("triviality examples") {
  GTContext g18(construct("G18"));
  GTDatum d{sub(g18, {"b"}), sub(g18, {"x", "a"}), {}, {}};
  d.alpha = zeros(g18.h2(d.F).factors().size());
  d.beta = zeros(g18.h2(d.Gamma).factors().size());
  REQUIRE(g18.is_valid(d));
  CHECK(g18.triviality(d).cocommutative);

  // (G, 1, G, 1) is not a valid datum, but both flags are defined on it;
  // they hold exactly when G is abelian.
  for (const char* spec : {"C 2 x C 2", "C 6", "G18"}) {
    GTContext ctx(construct(spec));
    const int W = ctx.whole_index();
    GTDatum whole{W, W, zeros(ctx.h2(W).factors().size()), zeros(ctx.h2(W).factors().size())};
    bool ab = is_abelian(ctx.group(), whole_subgroup(ctx));
    CHECK(ctx.triviality(whole).cocommutative == ab);
    CHECK(ctx.triviality(whole).commutative == ab);
  }

  GTContext s4(construct("S 4"));
  int D4 = sub(s4, {"(14)(23)", "(34)"}), A4 = sub(s4, {"(13)(24)", "(243)"});
  GTDatum sk = one_datum(s4, D4, A4, false, true);
  CHECK_FALSE(s4.triviality(sk).cocommutative);
  CHECK_FALSE(s4.triviality(sk).commutative);
}

TEST_CASE("duality and twist examples") {
  GTContext s4(construct("S 4"));
  auto c = s4.classify();
  for (size_t i = 0; i < c.classes.size(); ++i) {
    const auto& k = c.classes[i];
    REQUIRE(k.dual_of >= 0);
    CHECK(c.classes[k.dual_of].dual_of == static_cast<int>(i));
    CHECK(s4.dual(s4.dual(k.rep)) == k.rep);
  }
  // (D4, 1, C3, 1) and (C3, 1, D4, 1) land in mutually dual classes.
  int D4 = sub(s4, {"(34)", "(13)(24)"}), C3 = sub(s4, {"(243)"});
  GTDatum uno = one_datum(s4, D4, C3, false, false);
  GTDatum dos = one_datum(s4, C3, D4, false, false);
  CHECK(s4.canonical(s4.dual(uno)) == s4.canonical(dos));
  CHECK(s4.is_abelian_extension(uno));

  int V = sub(s4, {"(12)", "(34)"});
  CHECK(s4.is_twist(one_datum(s4, V, s4.whole_index(), true, false)));

  GTContext g18(construct("G18"));
  GTDatum t = one_datum(g18, sub(g18, {"a", "b"}), g18.whole_index(), true, false);
  CHECK(g18.is_twist(t));
  CHECK_FALSE(g18.is_abelian_extension(t));
}

TEST_CASE("grouplike examples") {
  GTContext s4(construct("S 4"));
  GTDatum dos = one_datum(s4, sub(s4, {"(243)"}), sub(s4, {"(34)", "(13)(24)"}), false, false);
  CHECK(s4.grouplike_order(dos) == 6);
  auto gh = s4.grouplike_group(dos);
  REQUIRE(gh);
  CHECK(isomorphic(*gh, construct("S 3")));

  GTDatum whole = one_datum(s4, s4.whole_index(), s4.trivial_index(), false, false);
  CHECK(s4.grouplike_order(whole) == 2);

  GTContext c20(construct("C 5 : 2 : C 20"));
  // x of the table is t^5 here; N = <a, b> with a = t^4 central, b = x.
  GTDatum uno = one_datum(c20, sub(c20, {"t^5"}), sub(c20, {"t^4", "x"}), false, true);
  CHECK(c20.grouplike_order(uno) == 20);
  auto g20 = c20.grouplike_group(uno);
  REQUIRE(g20);
  CHECK(identify(*g20) == "C20");
}

TEST_CASE("reduce by a global class") {
  GTContext s4(construct("S 4"));
  int D4 = sub(s4, {"(14)(23)", "(34)"}), A4 = sub(s4, {"(13)(24)", "(243)"});
  GTDatum d = one_datum(s4, D4, A4, true, false);
  GTDatum r = s4.reduce_by_global_class(d);
  CHECK(s4.h2(D4).is_trivial(r.alpha));
  CHECK_FALSE(s4.h2(A4).is_trivial(r.beta));
  CHECK(s4.is_valid(r));
  CHECK(s4.canonical(r) == s4.canonical(d));
  GTDatum already = s4.reduce_by_global_class(r);
  CHECK(already == r);

  GTContext g18(construct("G18"));
  CHECK(g18.h2_global().size() == 1);
  GTDatum t = one_datum(g18, sub(g18, {"a", "b"}), g18.whole_index(), true, false);
  CHECK(g18.reduce_by_global_class(t) == t);
}

TEST_CASE("module tensor rank examples") {
  GTContext s4(construct("S 4"));
  int N = sub(s4, {"(14)(23)", "(13)(24)"});
  auto trivial_datum = [&](int F, int Gm) {
    return GTDatum{F, Gm, zeros(s4.h2(F).factors().size()), zeros(s4.h2(Gm).factors().size())};
  };
  CHECK(s4.module_tensor_rank(trivial_datum(N, sub(s4, {"(34)", "(243)"}))) == 1);
  CHECK(s4.module_tensor_rank(trivial_datum(s4.whole_index(), s4.whole_index())) == 5);
  CHECK(s4.module_tensor_rank(trivial_datum(N, sub(s4, {"(234)"}))) == 2);
}

TEST_CASE("enumerated data re-verify independently") {
  for (const char* spec : {"S 4", "G18", "D 8", "A 4 x C 2", "C 2 x C 2 x C 2"}) {
    INFO(spec);
    GTContext ctx(construct(spec));
    const Group& G = ctx.group();
    const int m = ctx.modulus();
    auto data = ctx.enumerate_data();
    std::set<std::tuple<int, int, long long, long long>> listed;
    for (const auto& d : data)
      listed.insert({d.F, d.Gamma, ctx.h2(d.F).index_of(d.alpha), ctx.h2(d.Gamma).index_of(d.beta)});
    const auto& subs = ctx.subgroups();
    for (size_t f = 0; f < subs.size(); ++f)
      for (size_t g = 0; g < subs.size(); ++g) {
        ElemSet prod;
        for (int x : subs[f].members)
          for (int y : subs[g].members) prod.add(G.mul(x, y));
        bool fact = prod.count() == G.order();
        CHECK(fact == ctx.is_factorization(static_cast<int>(f), static_cast<int>(g)));
        if (!fact) continue;
        Subgroup D = intersect(subs[f], subs[g]);
        Group dg = subgroup_group(G, D);
        const auto &hf = ctx.h2(static_cast<int>(f)), &hg = ctx.h2(static_cast<int>(g));
        for (long long a = 0; a < hf.size(); ++a)
          for (long long b = 0; b < hg.size(); ++b) {
            Cocycle2 ca = restrict_between(hf.representative(hf.vector_at(a)), subs[f], D);
            Cocycle2 cb = restrict_between(hg.representative(hg.vector_at(b)), subs[g], D);
            Cocycle2 rho = Cocycle2::trivial(D.order(), m);
            for (size_t i = 0; i < rho.table.size(); ++i)
              rho.table[i] = static_cast<int>(mod_pos(ca.table[i] - cb.table[i], m));
            CHECK(satisfies_cocycle(dg, rho));
            bool valid = regular_class_count(dg, rho) == 1;
            CHECK(valid == listed.count({static_cast<int>(f), static_cast<int>(g), a, b}) > 0);
          }
      }
  }
}

TEST_CASE("Aut G x| H2(G) action laws (randomized)") {
  uint64_t seed = test_seed("action laws");
  std::mt19937_64 rng(seed);
  for (const char* spec : {"S 4", "A 4 x C 2", "C 2 x C 2 x C 2", "D 4", "C 2 x C 4"}) {
    INFO(spec << " seed " << seed);
    GTContext ctx(construct(spec));
    auto data = ctx.enumerate_data();
    const auto& auts = ctx.automorphisms();
    const auto& hg = ctx.h2_global();
    const int W = ctx.whole_index();
    auto pick = [&](size_t n) { return static_cast<size_t>(rng() % n); };
    for (int trial = 0; trial < 40; ++trial) {
      const GTDatum& d = data[pick(data.size())];
      const GroupMap &t1 = auts[pick(auts.size())], &t2 = auts[pick(auts.size())];
      auto g1 = hg.vector_at(static_cast<long long>(pick(hg.size())));
      auto g2 = hg.vector_at(static_cast<long long>(pick(hg.size())));
      GTDatum two_steps = ctx.act(ctx.act(d, t2, g2), t1, g1);
      int to = -1;
      auto pulled = ctx.transport_class(W, g1, inverse_map(t2), &to);
      CHECK(to == W);
      GTDatum one_step = ctx.act(d, compose(t1, t2), hg.add(g2, pulled));
      CHECK(two_steps == one_step);
      CHECK(ctx.is_valid(two_steps));
      CHECK(ctx.canonical(two_steps) == ctx.canonical(d));
    }
  }
}

TEST_CASE("dual involution and triviality symmetry") {
  for (const char* spec : {"S 4", "G18", "A 4 x C 2", "D 6"}) {
    INFO(spec);
    GTContext ctx(construct(spec));
    for (const auto& d : ctx.enumerate_data()) {
      GTDatum e = ctx.dual(d);
      CHECK(ctx.is_valid(e));
      CHECK(ctx.dual(e) == d);
      CHECK(ctx.triviality(d).cocommutative == ctx.triviality(e).commutative);
      CHECK(ctx.triviality(d).commutative == ctx.triviality(e).cocommutative);
    }
  }
}

TEST_CASE("module tensor rank is one on exact factorizations") {
  for (const char* spec : {"S 4", "G18", "D 6", "A 4 x C 2", "C 7 : 3 : C 6", "D 12"}) {
    INFO(spec);
    GTContext ctx(construct(spec));
    const auto& subs = ctx.subgroups();
    int seen = 0;
    for (auto [f, g] : ctx.factorizations()) {
      if (intersect(subs[f], subs[g]).order() != 1) continue;
      GTDatum d{f, g, zeros(ctx.h2(f).factors().size()), zeros(ctx.h2(g).factors().size())};
      CHECK(ctx.module_tensor_rank(d) == 1);
      ++seen;
    }
    CHECK(seen > 0);
  }
}

TEST_CASE("grouplike group agrees with the semidirect oracle when alpha = 1") {
  for (const char* spec : {"S 4", "G18", "C 5 : 2 : C 20", "A 4 x C 2", "D 8", "C 7 : 3 : C 6"}) {
    INFO(spec);
    GTContext ctx(construct(spec));
    for (const auto& d : ctx.enumerate_data()) {
      long long order = ctx.grouplike_order(d);
      CHECK((2LL * ctx.group().order()) % order == 0);
      auto gh = ctx.grouplike_group(d);
      if (!ctx.h2(d.F).is_trivial(d.alpha)) {
        if (gh) CHECK(gh->order() == order);
        continue;
      }
      REQUIRE(gh);
      CHECK(gh->order() == order);
      Group oracle = semidirect_grouplikes(ctx.group(), ctx.subgroups()[d.F]);
      CHECK(oracle.order() == order);
      CHECK(isomorphic(*gh, oracle));
    }
  }
}

TEST_CASE("classification is independent of element order (randomized)") {
  uint64_t seed = test_seed("classification relabelling");
  std::mt19937_64 rng(seed);
  for (const char* spec : {"S 4", "G18", "A 4 x C 2"}) {
    INFO(spec << " seed " << seed);
    Group g = construct(spec);
    Group h = shuffled(g, rng);
    auto a = GTContext(g).classify(true), b = GTContext(h).classify(true);
    CHECK(invariant_profile(a) == invariant_profile(b));
    CHECK(a.raw_cases.size() == b.raw_cases.size());
  }
}
