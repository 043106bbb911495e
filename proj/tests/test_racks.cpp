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

#include <algorithm>
#include <numeric>
#include <random>

#include "gth/racks.hpp"
#include "test_util.hpp"

using namespace gth;

namespace {

// Exhaustive search over all bijections.
bool brute_isomorphic(const Rack& X, const Rack& Y) {
  if (X.size != Y.size) return false;
  std::vector<int> p(X.size);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (int x = 0; x < X.size && ok; ++x)
      for (int y = 0; y < X.size && ok; ++y) ok = p[X.act(x, y)] == Y.act(p[x], p[y]);
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

bool is_iso(const Rack& X, const Rack& Y, const std::vector<int>& f) {
  std::vector<int> s = f;
  std::sort(s.begin(), s.end());
  for (int i = 0; i < X.size; ++i)
    if (s[i] != i) return false;
  for (int x = 0; x < X.size; ++x)
    for (int y = 0; y < X.size; ++y)
      if (f[X.act(x, y)] != Y.act(f[x], f[y])) return false;
  return true;
}

}  // namespace

TEST_CASE("affine rack examples") {
  Rack q52 = affine_rack_q(5, 2);
  CHECK(q52.size == 5);
  for (int x = 0; x < 5; ++x)
    for (int y = 0; y < 5; ++y) CHECK(q52.act(x, y) == ((-x + 2 * y) % 5 + 5) % 5);
  Group C4 = construct("C 4");
  Rack triv = affine_rack(C4, identity_map(C4), "trivial");
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) CHECK(triv.act(x, y) == y);
  for (int n : {3, 4, 5, 6, 7}) {
    Rack d = dihedral_rack(n);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) CHECK(d.act(x, y) == ((2 * x - y) % n + n) % n);
  }
  Group S3 = construct("S 3");
  CHECK_THROWS_AS(affine_rack(S3, identity_map(S3), "x"), Error);
  GroupMap bad{{0, 0, 1, 3}};
  CHECK_THROWS_AS(affine_rack(C4, bad, "x"), Error);
  Rack t = rack_by_name("T");
  CHECK(t.size == 4);
  CHECK_FALSE(check_rack(t).has_value());
}

TEST_CASE("conjugacy class racks") {
  CHECK(rack_by_name("O 2^4").size == 6);
  CHECK(rack_by_name("O 4^4").size == 6);
  CHECK(rack_by_name("O 2^5").size == 10);
  Group D4 = construct("D 4");
  Rack single = conj_class_rack(D4, D4.word("r^2"));
  CHECK(single.size == 1);
  CHECK(single.act(0, 0) == 0);
}

TEST_CASE("rack isomorphism examples") {
  Group G = construct("C 5 : 2 : C 4");
  Rack cls = conj_class_rack(G, G.word("t"));
  auto f = rack_iso(affine_rack_q(5, 2), cls);
  REQUIRE(f.has_value());
  CHECK(is_iso(affine_rack_q(5, 2), cls, *f));
  Rack o = rack_by_name("O 2^4");
  auto id = rack_iso(o, o);
  REQUIRE(id.has_value());
  CHECK(is_iso(o, o, *id));
  CHECK(rack_iso(dihedral_rack(3), rack_by_name("O 2^3")).has_value());
  CHECK(rack_iso(rack_by_name("O 2^4"), rack_by_name("O 4^4")).has_value() ==
        brute_isomorphic(rack_by_name("O 2^4"), rack_by_name("O 4^4")));
  CHECK_FALSE(rack_iso(affine_rack_q(5, 2), affine_rack_q(5, 3)).has_value());
  CHECK_FALSE(brute_isomorphic(affine_rack_q(5, 2), affine_rack_q(5, 3)));
  CHECK_THROWS_AS(rack_iso(dihedral_rack(13), dihedral_rack(13)), Error);
}

TEST_CASE("rack isomorphism agrees with exhaustive search") {
  std::mt19937_64 rng(test_seed("rack iso"));
  std::vector<Rack> pool = {dihedral_rack(3), dihedral_rack(4), dihedral_rack(5), dihedral_rack(6),
                            affine_rack_q(5, 2), affine_rack_q(5, 3), affine_rack_q(5, 4),
                            affine_rack_q(4, 2), affine_rack_q(4, 3), affine_rack_q(3, 2),
                            rack_by_name("O 2^3"), rack_by_name("O 2^4"), rack_by_name("O 4^4"),
                            rack_by_name("O 3^4")};
  Group A4 = construct("A 4");
  pool.push_back(conj_class_rack(A4, A4.find_label("(123)")));
  pool.push_back(conj_class_rack(A4, A4.find_label("(132)")));
  for (int trial = 0; trial < 40; ++trial) {
    Rack X = pool[rng() % pool.size()];
    // Random relabelling of one side.
    std::vector<int> p(X.size);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    Rack Y = X;
    for (int x = 0; x < X.size; ++x)
      for (int y = 0; y < X.size; ++y) Y.op[p[x] * X.size + p[y]] = p[X.act(x, y)];
    auto f = rack_iso(X, Y);
    REQUIRE(f.has_value());
    CHECK(is_iso(X, Y, *f));
    const Rack& Z = pool[rng() % pool.size()];
    if (Z.size <= 8) CHECK(rack_iso(X, Z).has_value() == brute_isomorphic(X, Z));
  }
}

TEST_CASE("rack axioms and quandle property") {
  std::mt19937_64 rng(test_seed("rack axioms"));
  for (int trial = 0; trial < 20; ++trial) {
    int q = std::vector<int>{3, 5, 7, 11}[rng() % 4];
    int b = 1 + static_cast<int>(rng() % (q - 1));
    Rack X = affine_rack_q(q, b);
    CHECK_FALSE(check_rack(X).has_value());
    CHECK(is_quandle(X));
  }
  for (const auto& e : catalog()) {
    CAPTURE(e.rack);
    Rack X = rack_by_name(e.rack);
    CHECK_FALSE(check_rack(X).has_value());
    CHECK(is_quandle(X));
  }
  Rack broken = dihedral_rack(5);
  std::swap(broken.op[1 * 5 + 2], broken.op[1 * 5 + 3]);
  broken.op[2 * 5 + 2] = broken.op[2 * 5 + 1];
  CHECK(check_rack(broken).has_value());
}

TEST_CASE("class racks do not depend on the representative") {
  std::mt19937_64 rng(test_seed("class racks"));
  for (const char* spec : {"S 4", "A 4", "D 5", "C 7 : 3 : C 6", "G18"}) {
    Group G = construct(spec);
    Group H = shuffled(G, rng);
    for (int trial = 0; trial < 5; ++trial) {
      int g = static_cast<int>(rng() % G.order());
      int h = static_cast<int>(rng() % G.order());
      Rack X = conj_class_rack(G, g);
      int gh = H.find_label(G.label(g));
      Rack Y = conj_class_rack(H, H.conj(h, gh));
      if (X.size > 12) continue;
      CHECK(rack_iso(X, Y).has_value());
    }
  }
}

TEST_CASE("catalog") {
  CHECK(catalog().size() == 11);
  const auto& d3 = catalog_lookup("D 3", "-1");
  CHECK(d3.nichols_dim == 12);
  CHECK(isomorphic(construct(d3.group), construct("C 3 x S 3")));
  const auto& t = catalog_lookup("T", "-1");
  CHECK(t.nichols_dim == 72);
  CHECK(t.group == "A 4 x C 2");
  CHECK_THROWS_AS(catalog_lookup("D 5", "-1"), Error);
  CHECK(catalog_lookup("O 2^4", "chi").nichols_dim == 576);
  CHECK(catalog_lookup("Q 7,5", "-1").nichols_dim == 326592);
  CHECK(catalog_lookup("O 2^5", "-1").nichols_dim == 8294400);
  CHECK(catalog_lookup("Q 5,3", "-1").nichols_dim == 1280);
  for (const auto& e : catalog()) {
    CAPTURE(e.rack);
    CAPTURE(e.group);
    Realization r = realize(e);
    CHECK_FALSE(r.class_representatives.empty());
    CHECK_FALSE(r.by_fingerprint);
  }
}

TEST_CASE("bosonization dimensions") {
  CHECK(bosonization_dimension("D 3", "-1", 18) == 216);
  CHECK(bosonization_dimension("O 2^4", "-1", 24) == 13824);
  CHECK(bosonization_dimension("O 2^5", "-1", 120) == 995328000LL);
  CHECK_THROWS_AS(bosonization_dimension("Q 11,2", "-1", 110), Error);
}

TEST_CASE("rack JSON export") {
  std::string j = rack_to_json(dihedral_rack(3));
  CHECK(j.find("\"size\":3") != std::string::npos);
  CHECK(j.find("\"op\":[[0,2,1],[2,1,0],[1,0,2]]") != std::string::npos);
}
