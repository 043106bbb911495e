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

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "gth/group.hpp"
#include "test_util.hpp"

using namespace gth;

namespace {

// Brute force: every bijection fixing 0 that respects multiplication.
int brute_aut_count(const Group& G) {
  std::vector<int> p(G.order());
  std::iota(p.begin(), p.end(), 0);
  int count = 0;
  do {
    if (is_homomorphism(G, G, GroupMap{p})) ++count;
  } while (std::next_permutation(p.begin() + 1, p.end()));
  return count;
}

// Brute force: subsets closed under multiplication, for tiny groups.
int brute_subgroup_count(const Group& G) {
  int n = G.order(), count = 0;
  for (uint32_t m = 0; m < (1u << n); ++m) {
    if (!(m & 1)) continue;
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b)
        if ((m >> a & 1) && (m >> b & 1) && !(m >> G.mul(a, b) & 1)) ok = false;
    count += ok;
  }
  return count;
}

}  // namespace

TEST_CASE("constructors produce the right orders and identity") {
  CHECK(construct("C 7").order() == 7);
  CHECK(construct("D 6").order() == 12);
  CHECK(construct("S4").order() == 24);
  CHECK(construct("A 5").order() == 60);
  CHECK(construct("C5:2:C4").order() == 20);
  CHECK(construct("C 7 : 3 : C 6").order() == 42);
  CHECK(construct("G18").order() == 18);
  CHECK(construct("A4 x C2").order() == 24);
  CHECK(construct("(S3 x C3) x C2").order() == 36);
  CHECK(construct("S 4").label(0) == "()");
}

TEST_CASE("parser rejects bad input with the right error kind") {
  auto kind_of = [](const char* s) {
    try {
      construct(s);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Internal;
  };
  CHECK(kind_of("Q8") == ErrorKind::Parse);
  CHECK(kind_of("C5:2:C3") == ErrorKind::Parse);
  CHECK(kind_of("C4:2:C2") == ErrorKind::Parse);
  CHECK(kind_of("S6") == ErrorKind::Limit);
  CHECK(kind_of("C 201") == ErrorKind::Limit);
  CHECK(kind_of("D 5 x") == ErrorKind::Parse);
  CHECK(kind_of("") == ErrorKind::Parse);
}

TEST_CASE("word evaluation and labels") {
  Group d = construct("D 5");
  CHECK(d.word("r^2 s") == 2 + 5);
  CHECK(d.word("s r") == d.mul(5, 1));
  CHECK(d.elem_order(d.word("r")) == 5);
  Group s4 = construct("S4");
  int t = s4.find_label("(12)(34)");
  REQUIRE(t >= 0);
  CHECK(s4.elem_order(t) == 2);
  CHECK(s4.find_label("(34)(12)") == t);
  CHECK(s4.find_label("(99)") == -1);
  CHECK(s4.find_label("(101)") == -1);
  CHECK(s4.find_label("(01)") == -1);
  Group c = construct("C5:2:C20");
  CHECK(c.elem_order(c.word("t^16")) == 5);
  CHECK(c.elem_order(c.word("x")) == 5);
}

TEST_CASE("subgroup lattice counts") {
  CHECK(all_subgroups(construct("S3")).size() == 6);
  CHECK(all_subgroups(construct("D4")).size() == 10);
  CHECK(all_subgroups(construct("C2 x C2 x C2")).size() == 16);
  auto s4 = construct("S4");
  auto subs4 = all_subgroups(s4);
  CHECK(subs4.size() == 30);
  CHECK(conjugacy_partition(s4, subs4).size() == 11);
  auto s5 = construct("S5");
  auto subs5 = all_subgroups(s5);
  CHECK(subs5.size() == 156);
  CHECK(conjugacy_partition(s5, subs5).size() == 19);
  for (const char* spec : {"S3", "D4", "C2 x C4", "C3 x C3", "D 6"}) {
    Group g = construct(spec);
    CHECK_MESSAGE(static_cast<int>(all_subgroups(g).size()) ==
                      brute_subgroup_count(g),
                  spec);
  }
  for (const auto& h : subs4) CHECK(is_subgroup(s4, h.members));
  CHECK(std::is_sorted(subs4.begin(), subs4.end(), subgroup_less));
}

TEST_CASE("automorphism groups") {
  CHECK(automorphisms(construct("D 6")).size() == 12);
  CHECK(automorphisms(construct("A4 x C2")).size() == 24);
  CHECK(automorphisms(construct("S4")).size() == 24);
  CHECK(automorphisms(construct("C2 x C2 x C2")).size() == 168);
  CHECK(automorphisms(construct("G18")).size() == 12);
  for (const char* spec : {"C2 x C2", "S3", "D4", "C8", "C2 x C4", "C3:2:C4"}) {
    Group g = construct(spec);
    auto auts = automorphisms(g);
    CHECK_MESSAGE(static_cast<int>(auts.size()) == brute_aut_count(g), spec);
    CHECK(auts.front() == identity_map(g));
    for (const auto& a : auts) {
      CHECK(is_homomorphism(g, g, a));
      CHECK(is_bijective(a, g.order()));
    }
  }
}

TEST_CASE("automorphism generators generate Aut") {
  for (const char* spec : {"D 6", "A4 x C2", "C3 x C3", "G18"}) {
    Group g = construct(spec);
    auto gens = automorphism_generators(g);
    std::set<std::vector<int>> seen{identity_map(g).img};
    std::vector<GroupMap> queue{identity_map(g)};
    for (size_t q = 0; q < queue.size(); ++q)
      for (const auto& a : gens) {
        GroupMap c = compose(a, queue[q]);
        if (seen.insert(c.img).second) queue.push_back(c);
      }
    CHECK_MESSAGE(seen.size() == automorphisms(g).size(), spec);
  }
}

TEST_CASE("isomorphism") {
  CHECK(isomorphic(construct("D3"), construct("S3")));
  CHECK(isomorphic(construct("G18"), construct("S3 x C3")));
  CHECK(isomorphic(construct("C6"), construct("C2 x C3")));
  CHECK(isomorphic(construct("D 6"), construct("S3 x C2")));
  CHECK_FALSE(isomorphic(construct("D 6"), construct("A4")));
  CHECK_FALSE(isomorphic(construct("C4"), construct("C2 x C2")));
  CHECK_FALSE(isomorphic(construct("D 10"), construct("C5:2:C4")));
  CHECK_FALSE(isomorphic(construct("D4"), construct("C2 x C4")));
  auto f = isomorphism(construct("D 6"), construct("S3 x C2"));
  REQUIRE(f);
  CHECK(is_homomorphism(construct("D 6"), construct("S3 x C2"), *f));
  CHECK(is_bijective(*f, 12));
}

TEST_CASE("identify") {
  CHECK(identify(construct("S3 x C2")) == "D6");
  CHECK(identify(construct("C2 x C2")) == "C2 x C2");
  CHECK(identify(construct("C2 x C3 x C4")) == "C2 x C12");
  CHECK(identify(construct("G18")) == "S3 x C3");
  CHECK(identify(construct("A4")) == "A4");
  CHECK(identify(construct("C5:2:C4")) == "C5:2:C4");
  CHECK(identify(construct("C1")) == "C1");
}

TEST_CASE("abelian shape properties (randomized)") {
  uint64_t seed = test_seed("abelian shapes");
  std::mt19937_64 rng(seed);
  INFO("seed " << seed);
  const std::vector<std::string> specs{"C2 x C4 x C3", "C3 x C3 x C9", "C2 x C2 x C2",
                                       "C6 x C10", "C8 x C2 x C5", "C12 x C6"};
  for (const auto& spec : specs) {
    Group g = construct(spec);
    std::vector<Subgroup> subs = all_subgroups(g);
    for (int trial = 0; trial < 8; ++trial) {
      const Subgroup& h = subs[rng() % subs.size()];
      AbelianShape sh = abelian_shape(g, h);
      int prod = 1;
      for (size_t i = 0; i < sh.factors.size(); ++i) {
        prod *= sh.factors[i];
        CHECK(sh.factors[i] > 1);
        CHECK(g.elem_order(sh.generators[i]) == sh.factors[i]);
        if (i) CHECK(sh.factors[i] % sh.factors[i - 1] == 0);
      }
      CHECK(prod == h.order());
      auto coords = shape_coordinates(g, h, sh);
      std::set<std::vector<int>> distinct(coords.begin(), coords.end());
      CHECK(static_cast<int>(distinct.size()) == h.order());
      CHECK(character_group(sh).order() == h.order());
    }
  }
}

TEST_CASE("double cosets partition G (randomized)") {
  uint64_t seed = test_seed("double cosets");
  std::mt19937_64 rng(seed);
  INFO("seed " << seed);
  for (const char* spec : {"S4", "D 6", "A4 x C2", "C5:2:C4"}) {
    Group g = construct(spec);
    auto subs = all_subgroups(g);
    for (int trial = 0; trial < 10; ++trial) {
      const Subgroup& f = subs[rng() % subs.size()];
      const Subgroup& gm = subs[rng() % subs.size()];
      auto dc = double_cosets(g, f, gm);
      // Oracle: explicit sets F g Gamma.
      std::vector<int> owner(g.order(), -1);
      int total = 0;
      for (size_t i = 0; i < dc.size(); ++i) {
        std::set<int> s;
        for (int a : f.members)
          for (int b : gm.members) s.insert(g.mul(g.mul(a, dc[i].representative), b));
        CHECK(static_cast<int>(s.size()) == dc[i].size);
        CHECK(dc[i].size * dc[i].stabilizer.order() == f.order() * gm.order());
        for (int x : s) {
          CHECK(owner[x] == -1);
          owner[x] = static_cast<int>(i);
        }
        total += dc[i].size;
      }
      CHECK(total == g.order());
    }
  }
}

TEST_CASE("quotients and normal subgroups") {
  Group s4 = construct("S4");
  Subgroup v = generate(s4, {s4.find_label("(12)(34)"), s4.find_label("(13)(24)")});
  REQUIRE(is_normal(s4, v));
  Quotient q = quotient(s4, v);
  CHECK(identify(q.group) == "S3");
  CHECK(commutator_subgroup(s4, whole(s4)).order() == 12);
  CHECK(center(construct("D4")).order() == 2);
  CHECK(normalizer(s4, generate(s4, {s4.find_label("(12)")})).order() == 4);
}

namespace {


}  // namespace

TEST_CASE("group examples") {
  for (int n : {3, 4, 5, 6, 8, 9}) {
    Group d = construct("D " + std::to_string(n));
    Subgroup derived = commutator_subgroup(d, whole(d));
    CHECK(derived == generate(d, {n % 2 ? 1 : 2}));
  }
  CHECK(center(construct("D 6")).order() == 2);
  CHECK(center(construct("S4")).order() == 1);
  Group s4 = construct("S4");
  Subgroup c3 = generate(s4, {s4.find_label("(243)")});
  CHECK(normalizer(s4, c3).order() / c3.order() == 2);
  Group d4 = construct("D4");
  std::vector<Subgroup> order2;
  for (const auto& h : all_subgroups(d4))
    if (h.order() == 2) order2.push_back(h);
  CHECK(conjugacy_partition(d4, order2).size() == 3);
  CHECK(all_subgroups(construct("C 7")).size() == 2);
  Group big = construct("C 5 ⋊_2 C 20");
  Subgroup ab = generate(big, {big.word("t^4"), big.word("x")});
  CHECK(big.order() == 100);
  CHECK(ab.order() == 25);
  CHECK(is_normal(big, ab));
  CHECK(isomorphic(construct("C5:2:C4"), construct("C5:3:C4")));
  CHECK(isomorphic(construct("C7:3:C6"), construct("C7:5:C6")));
  CHECK(automorphisms(construct("C2")).size() == 1);
  AbelianShape c55 = abelian_shape(construct("C5 x C5"), whole(construct("C5 x C5")));
  CHECK(c55.factors == std::vector<int>{5, 5});
  Group d6 = construct("D 6");
  CHECK(abelian_shape(d6, generate(d6, {3, 6})).factors == std::vector<int>{2, 2});
  CHECK(abelian_shape(construct("C6"), whole(construct("C6"))).factors ==
        std::vector<int>{6});
}

TEST_CASE("double coset examples in S4") {
  Group s4 = construct("S4");
  Subgroup n = generate(s4, {s4.find_label("(12)(34)"), s4.find_label("(13)(24)")});
  Subgroup s3 = generate(s4, {s4.find_label("(34)"), s4.find_label("(243)")});
  CHECK(double_cosets(s4, n, s3).size() == 1);
  CHECK(double_cosets(s4, whole(s4), whole(s4)).size() == 1);
  auto dc = double_cosets(s4, n, generate(s4, {s4.find_label("(234)")}));
  CHECK(dc.size() == 2);
  for (const auto& d : dc) CHECK(d.stabilizer.order() == 1);
}

TEST_CASE("invariance under element relabelling (randomized)") {
  uint64_t seed = test_seed("relabelling");
  std::mt19937_64 rng(seed);
  INFO("seed " << seed);
  std::vector<std::string> specs{"S4", "D 6", "A4 x C2", "C5:2:C4", "G18", "C2 x C2 x C2"};
  for (const auto& spec : specs) {
    Group g = construct(spec);
    Group h = shuffled(g, rng);
    CHECK(all_subgroups(h).size() == all_subgroups(g).size());
    CHECK(automorphisms(h).size() == automorphisms(g).size());
    CHECK(isomorphic(g, h));
    CHECK(isomorphic(h, g));
    CHECK(isomorphic(g, g));
    CHECK(identify(h) == identify(g));
    auto subs = all_subgroups(h);
    CHECK(conjugacy_partition(h, subs).size() ==
          conjugacy_partition(g, all_subgroups(g)).size());
    for (const auto& s : subs) CHECK(g.order() % s.order() == 0);
  }
}

TEST_CASE("automorphisms closed under composition and inverse") {
  for (const char* spec : {"D 6", "A4", "C3 x C3"}) {
    Group g = construct(spec);
    auto auts = automorphisms(g);
    std::set<std::vector<int>> all;
    for (const auto& a : auts) all.insert(a.img);
    for (const auto& a : auts) {
      CHECK(all.count(inverse_map(a).img));
      for (const auto& b : auts) CHECK(all.count(compose(a, b).img));
    }
  }
}
