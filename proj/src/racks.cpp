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

#include "gth/racks.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>

#include "json.hpp"

namespace gth {

namespace {

std::vector<int> translation(const Rack& X, int x) {
  return std::vector<int>(X.op.begin() + static_cast<long>(x) * X.size,
                          X.op.begin() + static_cast<long>(x + 1) * X.size);
}

std::vector<int> cycle_type(const std::vector<int>& perm) {
  std::vector<int> out;
  std::vector<bool> seen(perm.size(), false);
  for (size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (size_t j = i; !seen[j]; j = perm[j]) {
      seen[j] = true;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string type_string(const std::vector<int>& t) {
  std::string s = "[";
  for (size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
  return s + "]";
}

Rack checked(Rack X) {
  if (auto err = check_rack(X)) fail(ErrorKind::Internal, X.provenance + ": " + *err);
  return X;
}

}  // namespace

std::optional<std::string> check_rack(const Rack& X) {
  const int n = X.size;
  if (static_cast<int>(X.op.size()) != n * n) return std::string("operation table has the wrong size");
  for (int x = 0; x < n; ++x) {
    std::vector<bool> hit(n, false);
    for (int y = 0; y < n; ++y) {
      int z = X.act(x, y);
      if (z < 0 || z >= n || hit[z])
        return "left translation by " + std::to_string(x) + " is not a bijection";
      hit[z] = true;
    }
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (X.act(x, X.act(y, z)) != X.act(X.act(x, y), X.act(x, z)))
          return "self-distributivity fails at (" + std::to_string(x) + ", " +
                 std::to_string(y) + ", " + std::to_string(z) + ")";
  return std::nullopt;
}

bool is_quandle(const Rack& X) {
  for (int x = 0; x < X.size; ++x)
    if (X.act(x, x) != x) return false;
  return true;
}

Rack affine_rack(const Group& A, const GroupMap& T, std::string provenance) {
  if (!is_abelian(A, whole(A))) fail(ErrorKind::Invalid, "affine rack: group is not abelian");
  if (static_cast<int>(T.img.size()) != A.order() || !is_homomorphism(A, A, T) ||
      !is_bijective(T, A.order()))
    fail(ErrorKind::Invalid, "affine rack: T is not an automorphism");
  Rack X;
  X.size = A.order();
  X.op.resize(static_cast<size_t>(X.size) * X.size);
  for (int x = 0; x < X.size; ++x)
    for (int y = 0; y < X.size; ++y)
      X.op[x * X.size + y] = A.mul(A.mul(x, A.inv(T(x))), T(y));
  X.labels = A.labels();
  X.provenance = std::move(provenance);
  return checked(std::move(X));
}

Rack affine_rack_q(int q, int b) {
  if (q == 4) {
    // Addition is XOR on the coordinate bits.
    auto mulw = [](int v) {  // (c0 + c1 w) w = c1 + (c0 + c1) w
      int c0 = v & 1, c1 = v >> 1;
      return c1 | ((c0 ^ c1) << 1);
    };
    auto mul = [&](int u, int v) {
      int r = 0, p = v;
      if (u & 1) r ^= p;
      if (u & 2) r ^= mulw(p);
      return r;
    };
    if (b < 1 || b > 3) fail(ErrorKind::Invalid, "Q 4,b needs b in F_4^x");
    std::vector<int> table(16);
    std::vector<std::string> labels = {"0", "1", "w", "w+1"};
    for (int u = 0; u < 4; ++u)
      for (int v = 0; v < 4; ++v) table[u * 4 + v] = u ^ v;
    Group A = Group::trusted(4, table, labels, "F_4");
    GroupMap T{{mul(b, 0), mul(b, 1), mul(b, 2), mul(b, 3)}};
    return affine_rack(A, T, "Q 4," + std::to_string(b));
  }
  if (q < 2 || factorize(q).size() != 1 || factorize(q)[0].second != 1)
    fail(ErrorKind::Invalid, "Q q,b: q must be prime or 4");
  if (mod_pos(b, q) == 0) fail(ErrorKind::Invalid, "Q q,b: b must be non-zero");
  Group A = construct("C " + std::to_string(q));
  GroupMap T{std::vector<int>(q)};
  for (int x = 0; x < q; ++x) T.img[x] = static_cast<int>(mod_pos(static_cast<long long>(b) * x, q));
  Rack X = affine_rack(A, T, "Q " + std::to_string(q) + "," + std::to_string(mod_pos(b, q)));
  for (int x = 0; x < q; ++x) X.labels[x] = std::to_string(x);
  return X;
}

Rack dihedral_rack(int n) {
  Group A = construct("C " + std::to_string(n));
  GroupMap T{std::vector<int>(n)};
  for (int x = 0; x < n; ++x) T.img[x] = A.inv(x);
  Rack X = affine_rack(A, T, "D " + std::to_string(n));
  for (int x = 0; x < n; ++x) X.labels[x] = std::to_string(x);
  return X;
}

Rack conj_class_rack(const Group& G, int rep) {
  if (rep < 0 || rep >= G.order()) fail(ErrorKind::Invalid, "class representative out of range");
  std::vector<int> cls;
  for (int g = 0; g < G.order(); ++g) cls.push_back(G.conj(g, rep));
  std::sort(cls.begin(), cls.end());
  cls.erase(std::unique(cls.begin(), cls.end()), cls.end());
  std::vector<int> pos(G.order(), -1);
  for (size_t i = 0; i < cls.size(); ++i) pos[cls[i]] = static_cast<int>(i);
  Rack X;
  X.size = static_cast<int>(cls.size());
  X.op.resize(static_cast<size_t>(X.size) * X.size);
  for (int i = 0; i < X.size; ++i)
    for (int j = 0; j < X.size; ++j) X.op[i * X.size + j] = pos[G.conj(cls[i], cls[j])];
  for (int c : cls) X.labels.push_back(G.label(c));
  X.provenance = "class of " + G.label(rep) + " in " + G.provenance();
  return checked(std::move(X));
}

Rack rack_by_name(const std::string& name) {
  std::string s;
  for (unsigned char c : name)
    if (!std::isspace(c)) s += static_cast<char>(std::toupper(c));
  auto num = [&](size_t& p) {
    size_t start = p;
    int v = 0;
    while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) v = v * 10 + (s[p++] - '0');
    if (p == start) fail(ErrorKind::Parse, "rack name: expected a number in '" + name + "'");
    return v;
  };
  size_t p = 1;
  if (s == "T") {
    Rack X = affine_rack_q(4, 2);
    X.provenance = "T";
    return X;
  }
  if (!s.empty() && s[0] == 'D') {
    int n = num(p);
    if (p == s.size()) return dihedral_rack(n);
  } else if (!s.empty() && s[0] == 'Q') {
    int q = num(p);
    if (p < s.size() && s[p] == ',') {
      ++p;
      int b = num(p);
      if (p == s.size()) return affine_rack_q(q, b);
    }
  } else if (!s.empty() && s[0] == 'O') {
    int j = num(p);
    if (p < s.size() && s[p] == '^') {
      ++p;
      int n = num(p);
      if (p == s.size()) {
        if (j < 2 || j > n) fail(ErrorKind::Invalid, "O j^n needs 2 <= j <= n");
        Group S = construct("S " + std::to_string(n));
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        for (int i = 0; i < j; ++i) perm[i] = (i + 1) % j;
        int rep = S.find_label(cycle_label(perm));
        Rack X = conj_class_rack(S, rep);
        X.provenance = "O " + std::to_string(j) + "^" + std::to_string(n);
        return X;
      }
    }
  }
  fail(ErrorKind::Parse, "unknown rack name '" + name + "'");
}

std::string rack_fingerprint(const Rack& X) {
  std::vector<std::string> types;
  for (int x = 0; x < X.size; ++x) types.push_back(type_string(cycle_type(translation(X, x))));
  std::sort(types.begin(), types.end());
  std::string s;
  for (const auto& t : types) s += t;
  return s;
}

std::optional<std::vector<int>> rack_iso(const Rack& X, const Rack& Y) {
  if (X.size > 12 || Y.size > 12)
    fail(ErrorKind::Limit, "rack_iso: sizes above 12 are not searched");
  if (X.size != Y.size) return std::nullopt;
  const int n = X.size;
  if (rack_fingerprint(X) != rack_fingerprint(Y)) return std::nullopt;
  std::vector<std::vector<int>> tx(n), ty(n);
  for (int i = 0; i < n; ++i) {
    tx[i] = cycle_type(translation(X, i));
    ty[i] = cycle_type(translation(Y, i));
  }
  std::vector<int> f(n, -1), finv(n, -1);

  // Assigns f(x) = y and closes under the operation; false on conflict.
  auto extend = [&](int x, int y, std::vector<int>& added) {
    std::vector<std::pair<int, int>> queue = {{x, y}};
    while (!queue.empty()) {
      auto [a, b] = queue.back();
      queue.pop_back();
      if (f[a] == b) continue;
      if (f[a] >= 0 || finv[b] >= 0 || tx[a] != ty[b]) return false;
      f[a] = b;
      finv[b] = a;
      added.push_back(a);
      for (int u = 0; u < n; ++u) {
        if (f[u] < 0) continue;
        for (auto [p, q] : {std::pair{u, a}, std::pair{a, u}}) {
          int img = Y.act(f[p], f[q]);
          int src = X.act(p, q);
          if (f[src] >= 0) {
            if (f[src] != img) return false;
          } else {
            queue.push_back({src, img});
          }
        }
      }
    }
    return true;
  };
  std::function<bool()> search = [&]() {
    int x = -1;
    for (int i = 0; i < n; ++i)
      if (f[i] < 0) {
        x = i;
        break;
      }
    if (x < 0) return true;
    for (int y = 0; y < n; ++y) {
      if (finv[y] >= 0 || tx[x] != ty[y]) continue;
      std::vector<int> added;
      if (extend(x, y, added) && search()) return true;
      for (int a : added) {
        finv[f[a]] = -1;
        f[a] = -1;
      }
    }
    return false;
  };
  if (!search()) return std::nullopt;
  return f;
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = {
      {"D 3", "-1", 12, "G18", "A18,xi and the other data over C3:C6"},
      {"Q 5,2", "-1", 1280, "C 5 : 2 : C 20", "data classes over C5:2:C20"},
      {"Q 5,3", "-1", 1280, "C 5 : 2 : C 20", "data classes over C5:2:C20"},
      {"O 2^4", "-1", 576, "S 4", "data classes over S4"},
      {"O 2^4", "chi", 576, "S 4", "data classes over S4"},
      {"O 4^4", "-1", 576, "S 4", "data classes over S4"},
      {"O 2^5", "-1", 8294400, "S 5", "data classes over S5"},
      {"O 2^5", "chi", 8294400, "S 5", "data classes over S5"},
      {"T", "-1", 72, "A 4 x C 2", "data classes over A4 x C2"},
      {"Q 7,3", "-1", 326592, "C 7 : 3 : C 6", "A7(2,3) and A7(3,2)"},
      {"Q 7,5", "-1", 326592, "C 7 : 3 : C 6", "A7(2,3) and A7(3,2)"},
  };
  return entries;
}

const CatalogEntry& catalog_lookup(const std::string& rack, const std::string& cocycle) {
  auto norm = [](const std::string& s) {
    std::string o;
    for (unsigned char c : s)
      if (!std::isspace(c)) o += static_cast<char>(std::toupper(c));
    return o;
  };
  for (const auto& e : catalog())
    if (norm(e.rack) == norm(rack) && norm(e.cocycle) == norm(cocycle)) return e;
  fail(ErrorKind::Invalid, "no catalog entry for (" + rack + ", " + cocycle + ")");
}

Realization realize(const CatalogEntry& e) {
  Rack X = rack_by_name(e.rack);
  Group G = construct(e.group);
  Realization r;
  r.rack_size = X.size;
  std::vector<bool> done(G.order(), false);
  for (int g = 0; g < G.order(); ++g) {
    if (done[g]) continue;
    std::vector<int> cls;
    for (int h = 0; h < G.order(); ++h) {
      int c = G.conj(h, g);
      if (!done[c]) cls.push_back(c);
      done[c] = true;
    }
    if (static_cast<int>(cls.size()) != X.size) continue;
    Rack C = conj_class_rack(G, g);
    bool match;
    if (X.size <= 12) {
      match = rack_iso(X, C).has_value();
    } else {
      match = rack_fingerprint(X) == rack_fingerprint(C);
      r.by_fingerprint = true;
    }
    if (match) r.class_representatives.push_back(g);
  }
  return r;
}

long long bosonization_dimension(const std::string& rack, const std::string& cocycle,
                                 long long hopf_dim) {
  if (hopf_dim < 1) fail(ErrorKind::Invalid, "Hopf algebra dimension must be positive");
  return catalog_lookup(rack, cocycle).nichols_dim * hopf_dim;
}

std::string rack_to_json(const Rack& X) {
  nlohmann::json j;
  j["size"] = X.size;
  std::vector<std::vector<int>> rows(X.size);
  for (int x = 0; x < X.size; ++x) rows[x] = translation(X, x);
  j["op"] = rows;
  j["labels"] = X.labels;
  j["provenance"] = X.provenance;
  return j.dump();
}

}  // namespace gth
