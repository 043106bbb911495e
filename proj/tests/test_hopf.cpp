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

#include <doctest.h>

#include <complex>
#include <map>
#include <random>

#include "gth/gt_data.hpp"
#include "gth/hopf.hpp"
#include "test_util.hpp"

using namespace gth;

namespace {

Subgroup gen(const Group& G, std::initializer_list<std::string> words) {
  std::vector<int> g;
  for (const auto& w : words) {
    int i = G.find_label(w);
    g.push_back(i >= 0 ? i : G.word(w));
  }
  return generate(G, g);
}

bool is_grouplike(const HopfStructure& H, const SparseVec& g) {
  SparseVec d = hopf_coproduct(H, g);
  std::map<int, CycScalar> want;
  for (const auto& [i, x] : g)
    for (const auto& [j, y] : g) want.emplace(i * H.dim + j, x * y);
  if (d.size() != want.size()) return false;
  for (const auto& [k, c] : d) {
    auto it = want.find(k);
    if (it == want.end() || !(it->second == c)) return false;
  }
  return hopf_counit(H, g).is_one();
}

std::vector<int> blocks(std::initializer_list<std::pair<int, int>> spec) {
  std::vector<int> out;
  for (auto [d, m] : spec)
    for (int i = 0; i < m; ++i) out.push_back(d);
  return out;
}

GTDatum plain_datum(const GTContext& ctx, int F, int Gamma) {
  return GTDatum{F, Gamma, ctx.h2(F).vector_at(0), ctx.h2(Gamma).vector_at(0)};
}

}  // namespace

TEST_CASE("cyclotomic arithmetic") {
  CHECK(cyclotomic_polynomial(1) == std::vector<int64_t>{-1, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<int64_t>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<int64_t>{1, 0, -1, 0, 1});
  CHECK(euler_phi(20) == 8);
  for (int n : {1, 2, 3, 4, 5, 7, 9, 12, 20}) {
    CHECK(CycScalar::root(n, n).is_one());
    CycScalar s(n);
    for (int k = 0; k < n; ++k) s += CycScalar::root(n, k);
    CHECK(s == CycScalar::rational(n, n == 1 ? 1 : 0));
  }
  CHECK(CycScalar::root(3, 1).lift(6) == CycScalar::root(6, 2));
  CHECK(CycScalar::root(4, 1) * CycScalar::root(6, 1) == CycScalar::root(12, 5));
}

TEST_CASE("cyclotomic arithmetic agrees with complex evaluation") {
  std::mt19937_64 rng(test_seed("cyclotomic"));
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int trial = 0; trial < 200; ++trial) {
    int n = std::vector<int>{3, 4, 5, 6, 8, 9, 12, 15}[trial % 8];
    auto random_elem = [&] {
      CycScalar s(n);
      for (int k = 0; k < n; ++k) s += CycScalar::rational(n, coef(rng)) * CycScalar::root(n, k);
      return s;
    };
    CycScalar a = random_elem(), b = random_elem();
    auto close = [](std::complex<double> x, std::complex<double> y) {
      return std::abs(x - y) < 1e-9 * (1 + std::abs(x));
    };
    CHECK(close((a * b).to_complex(), a.to_complex() * b.to_complex()));
    CHECK(close((a + b).to_complex(), a.to_complex() + b.to_complex()));
    if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
    CHECK(a * (b + a) == a * b + a * a);
  }
}

TEST_CASE("group algebra kS3") {
  Group S3 = construct("S 3");
  HopfStructure H = group_algebra(S3);
  CHECK(H.dim == 6);
  auto check = verify_hopf(H);
  CHECK_MESSAGE(check.ok, check.failure);
  CHECK(algebra_type(H) == std::vector<int>{1, 1, 2});
  CHECK(coalgebra_type(H) == blocks({{1, 6}}));
  GroupLikes g = grouplikes(H);
  CHECK(isomorphic(g.group, S3));
  for (const auto& e : g.elements) CHECK(is_grouplike(H, e));
  CHECK(verify_hopf(dual(H)).ok);
  CHECK(grouplikes(dual(H)).group.order() == 2);
}

TEST_CASE("corrupted comultiplication fails coassociativity") {
  HopfStructure H = group_algebra(construct("S 3"));
  // Delta(b_1) = b_1 (x) b_1 + b_1 (x) b_2
  H.comult[1].emplace_back(1 * H.dim + 2, CycScalar::rational(1, 1));
  auto check = verify_hopf(H);
  CHECK_FALSE(check.ok);
  CHECK(check.failure.rfind("coassociativity at", 0) == 0);
  CHECK(check.failure.find(H.basis[1]) != std::string::npos);
}

TEST_CASE("corrupted structures are rejected") {
  HopfStructure H = group_algebra(construct("C 3"));
  HopfStructure bad_mult = H;
  bad_mult.mult[1 * 3 + 1] = {{0, CycScalar::rational(1, 1)}};
  CHECK(verify_hopf(bad_mult).failure.rfind("associativity", 0) == 0);
  HopfStructure bad_s = H;
  bad_s.antipode[1] = {{1, CycScalar::rational(1, 1)}};
  CHECK(verify_hopf(bad_s).failure.rfind("antipode", 0) == 0);
  MatchedPairData mp = a18_matched_pair(1);
  int& t = mp.tau[(1 * 9 + 1) * 9 + 3];
  t = (t + 1) % 3;
  CHECK(check_matched_pair(mp).has_value());
  CHECK_THROWS_AS(bicrossed(mp), Error);
}

TEST_CASE("A18 bicrossed products") {
  for (int e : {1, 2}) {
    CAPTURE(e);
    HopfStructure H = bicrossed(a18_matched_pair(e));
    CHECK(H.dim == 18);
    auto check = verify_hopf(H);
    CHECK_MESSAGE(check.ok, check.failure);
    GroupLikes g = grouplikes(H);
    CHECK(g.group.order() == 9);
    CHECK(isomorphic(g.group, construct("C 3 x C 3")));
    for (const auto& x : g.elements) CHECK(is_grouplike(H, x));
    HopfStructure D = dual(H);
    CHECK(verify_hopf(D).ok);
    GroupLikes gd = grouplikes(D);
    CHECK(gd.group.order() == 6);
    for (const auto& x : gd.elements) CHECK(is_grouplike(D, x));
    CHECK(is_semisimple(H));
  }
}

TEST_CASE("A18 actions match the factorization of G18") {
  Group G = construct("G18");
  MatchedPairData fact = matched_pair_from_factorization(G, gen(G, {"x"}), gen(G, {"a", "b"}));
  MatchedPairData a18 = a18_matched_pair(1);
  CHECK(fact.left == a18.left);
  CHECK(fact.right == a18.right);
  // With tau trivial the group-likes are Gamma-hat times the fixed points.
  CHECK(grouplikes(bicrossed(fact)).group.order() == 18);
}

TEST_CASE("matched pair examples") {
  Group G = construct("C 7 : 3 : C 6");
  MatchedPairData mp = matched_pair_from_factorization(G, gen(G, {"t^3"}), gen(G, {"x", "t^2"}));
  CHECK_FALSE(check_matched_pair(mp).has_value());
  Group P = construct("C 4 x S 3");
  Subgroup A = gen(P, {"(g,())"}), B = gen(P, {"(1,(12))", "(1,(123))"});
  MatchedPairData d = matched_pair_from_factorization(P, A, B);
  for (int g = 0; g < d.Gamma.order(); ++g)
    for (int f = 0; f < d.F.order(); ++f) {
      CHECK(d.act_left(g, f) == f);
      CHECK(d.act_right(g, f) == g);
    }
  Group S4 = construct("S 4");
  MatchedPairData s = matched_pair_from_factorization(S4, gen(S4, {"(1324)"}), gen(S4, {"(34)", "(243)"}));
  CHECK_FALSE(check_matched_pair(s).has_value());
  CHECK_THROWS_AS(matched_pair_from_factorization(S4, gen(S4, {"(12)"}), gen(S4, {"(12)", "(123)"})),
                  Error);
}

TEST_CASE("C7:3:C6 bicrossed products and coalgebra types") {
  Group G = construct("C 7 : 3 : C 6");
  Subgroup C2 = gen(G, {"t^3"}), C3 = gen(G, {"t^2"});
  Subgroup M21 = gen(G, {"x", "t^2"}), D7 = gen(G, {"x", "t^3"});
  HopfStructure H = bicrossed(matched_pair_from_factorization(G, C2, M21));
  CHECK(H.dim == 42);
  auto check = verify_hopf(H);
  CHECK_MESSAGE(check.ok, check.failure);
  CHECK(coalgebra_type(H) == blocks({{1, 6}, {3, 4}}));
  CHECK(algebra_type(H) == blocks({{1, 6}, {2, 9}}));
  HopfStructure K = bicrossed(matched_pair_from_factorization(G, C3, D7));
  CHECK(verify_hopf(K).ok);
  CHECK(coalgebra_type(K) == blocks({{1, 6}, {2, 9}}));
  CHECK(algebra_type(K) == blocks({{1, 6}, {3, 4}}));
}

TEST_CASE("group algebra types follow conjugacy classes") {
  for (const char* spec : {"S 3", "D 4", "C 5 : 2 : C 4", "A 4", "C 2 x C 4", "G18"}) {
    CAPTURE(spec);
    Group G = construct(spec);
    HopfStructure H = group_algebra(G);
    auto t = algebra_type(H);
    int sum = 0;
    for (int d : t) sum += d * d;
    CHECK(sum == G.order());
    CHECK(static_cast<int>(t.size()) == static_cast<int>(conjugacy_classes(G, whole(G)).size()));
    CHECK(center_dimension(H) == static_cast<int>(t.size()));
    CHECK(coalgebra_type(H) == blocks({{1, G.order()}}));
    CHECK(grouplikes(H).group.order() == G.order());
  }
  CHECK(algebra_type(group_algebra(construct("S 4"))) == std::vector<int>{1, 1, 2, 3, 3});
}

TEST_CASE("group-likes of bicrossed products match the datum formula") {
  for (const char* spec : {"S 3", "S 4", "A 4", "G18", "C 7 : 3 : C 6", "D 6", "C 5 : 2 : C 4"}) {
    CAPTURE(spec);
    GTContext ctx(construct(spec));
    const Group& G = ctx.group();
    const auto& subs = ctx.subgroups();
    for (auto [F, Gm] : ctx.factorizations()) {
      if (intersect(subs[F], subs[Gm]).order() != 1) continue;
      CAPTURE(F);
      CAPTURE(Gm);
      // k^F # k Gamma carries the datum (F, 1, Gamma, 1).
      HopfStructure H = bicrossed(matched_pair_from_factorization(G, subs[Gm], subs[F]));
      CHECK(H.dim == G.order());
      GroupLikes g = grouplikes(H);
      CHECK(g.group.order() == ctx.grouplike_order(plain_datum(ctx, F, Gm)));
      auto gg = ctx.grouplike_group(plain_datum(ctx, F, Gm));
      REQUIRE(gg.has_value());
      CHECK(isomorphic(*gg, g.group));
      CHECK(H.dim % g.group.order() == 0);
      HopfStructure D = dual(H);
      CHECK(grouplikes(D).group.order() == ctx.grouplike_order(plain_datum(ctx, Gm, F)));
    }
  }
}

TEST_CASE("bicrossed products satisfy the Hopf axioms") {
  std::mt19937_64 rng(test_seed("bicrossed axioms"));
  std::vector<std::string> specs = {"S 3", "S 4", "A 4", "G18", "D 6", "C 5 : 2 : C 4",
                                    "C 7 : 3 : C 6", "D 5", "C 3 : 2 : C 4"};
  for (int trial = 0; trial < 12; ++trial) {
    const std::string& spec = specs[rng() % specs.size()];
    Group G = shuffled(construct(spec), rng);
    GTContext ctx(G);
    std::vector<std::pair<int, int>> exact;
    for (auto [F, Gm] : ctx.factorizations())
      if (intersect(ctx.subgroups()[F], ctx.subgroups()[Gm]).order() == 1) exact.push_back({F, Gm});
    auto [F, Gm] = exact[rng() % exact.size()];
    CAPTURE(spec);
    CAPTURE(F);
    CAPTURE(Gm);
    HopfStructure H = bicrossed(matched_pair_from_factorization(G, ctx.subgroups()[F], ctx.subgroups()[Gm]));
    CHECK(H.dim == ctx.subgroups()[F].order() * ctx.subgroups()[Gm].order());
    auto check = verify_hopf(H);
    CHECK_MESSAGE(check.ok, check.failure);
    auto dcheck = verify_hopf(dual(H));
    CHECK_MESSAGE(dcheck.ok, dcheck.failure);
    // S^2 = id in the semisimple case.
    for (int i = 0; i < H.dim; ++i) {
      SparseVec s2;
      std::map<int, CycScalar> acc;
      for (const auto& [j, c] : H.antipode[i])
        for (const auto& [k, d] : H.antipode[j]) {
          auto [it, ins] = acc.try_emplace(k, c * d);
          if (!ins) it->second += c * d;
        }
      for (const auto& [k, v] : acc)
        if (!v.is_zero()) s2.emplace_back(k, v);
      REQUIRE(s2.size() == 1);
      CHECK(s2[0].first == i);
      CHECK(s2[0].second.is_one());
    }
  }
}

TEST_CASE("Hopf JSON export") {
  HopfStructure H = bicrossed(a18_matched_pair(1));
  std::string j = hopf_to_json(H);
  CHECK(j.find("\"dim\":18") != std::string::npos);
  CHECK(j.find("\"conductor\":3") != std::string::npos);
  CHECK(j.find("\"antipode\"") != std::string::npos);
  CHECK(block_string({1, 1, 2}) == "1^2 2^1");
}
