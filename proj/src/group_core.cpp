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
#include <cctype>
#include <unordered_map>
#include <unordered_set>

#include "gth/group.hpp"

namespace gth {

namespace {

void fill_derived(int n, const std::vector<int>& mul, std::vector<int>& inv,
                  std::vector<int>& ord) {
  inv.assign(n, -1);
  ord.assign(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (mul[a * n + b] == 0) {
        inv[a] = b;
        break;
      }
  for (int a = 0; a < n; ++a) {
    int k = 1;
    for (int x = a; x != 0; x = mul[x * n + a]) {
      ++k;
      if (k > n + 1) fail(ErrorKind::Invalid, "element of infinite order");
    }
    ord[a] = a == 0 ? 1 : k;
  }
}

// Canonicalizes a pure cycle-notation string such as "(243)(15)".
std::string canonical_cycles(std::string_view s) {
  std::vector<std::vector<int>> cycles;
  int maxpt = 0;
  size_t i = 0;
  while (i < s.size()) {
    if (s[i] != '(') return {};
    ++i;
    std::vector<int> cyc;
    while (i < s.size() && s[i] != ')') {
      if (std::isspace(static_cast<unsigned char>(s[i]))) {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '0') return {};
      if (std::find(cyc.begin(), cyc.end(), s[i] - '0') != cyc.end()) return {};
      cyc.push_back(s[i] - '0');
      maxpt = std::max(maxpt, s[i] - '0');
      ++i;
    }
    if (i == s.size()) return {};
    ++i;
    cycles.push_back(cyc);
  }
  std::vector<int> perm(maxpt);
  for (int k = 0; k < maxpt; ++k) perm[k] = k;
  // Rightmost cycle applied first.
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
    const auto& c = *it;
    std::vector<int> step(maxpt);
    for (int k = 0; k < maxpt; ++k) step[k] = k;
    for (size_t j = 0; j < c.size(); ++j)
      step[c[j] - 1] = c[(j + 1) % c.size()] - 1;
    std::vector<int> next(maxpt);
    for (int k = 0; k < maxpt; ++k) next[k] = step[perm[k]];
    perm = next;
  }
  return cycle_label(perm);
}

}  // namespace

Group::Group(int order, std::vector<int> table, std::vector<std::string> labels,
             std::string provenance)
    : n_(order),
      mul_(std::move(table)),
      labels_(std::move(labels)),
      provenance_(std::move(provenance)) {
  const int n = n_;
  if (n < 1 || n > kMaxOrder)
    fail(ErrorKind::Limit, "group order out of range: " + std::to_string(n));
  if (static_cast<int>(mul_.size()) != n * n ||
      static_cast<int>(labels_.size()) != n)
    fail(ErrorKind::Invalid, "table shape mismatch");
  for (int v : mul_)
    if (v < 0 || v >= n) fail(ErrorKind::Invalid, "table entry out of range");
  for (int a = 0; a < n; ++a)
    if (mul(0, a) != a || mul(a, 0) != a)
      fail(ErrorKind::Invalid, "index 0 is not the identity");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int ab = mul(a, b);
      for (int c = 0; c < n; ++c)
        if (mul(ab, c) != mul(a, mul(b, c)))
          fail(ErrorKind::Invalid, "table is not associative");
    }
  fill_derived(n, mul_, inv_, ord_);
  for (int a = 0; a < n; ++a)
    if (inv_[a] < 0 || mul(inv_[a], a) != 0)
      fail(ErrorKind::Invalid, "missing inverse");
}

Group Group::trusted(int order, std::vector<int> table,
                     std::vector<std::string> labels, std::string provenance) {
  Group g;
  g.n_ = order;
  g.mul_ = std::move(table);
  g.labels_ = std::move(labels);
  g.provenance_ = std::move(provenance);
  fill_derived(order, g.mul_, g.inv_, g.ord_);
  return g;
}

int Group::pow(int a, long long k) const {
  long long o = ord_[a];
  k %= o;
  if (k < 0) k += o;
  int r = 0;
  for (long long i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

int Group::commutator(int a, int b) const {
  return mul(mul(a, b), mul(inv(a), inv(b)));
}

int Group::find_label(std::string_view label) const {
  for (int a = 0; a < n_; ++a)
    if (labels_[a] == label) return a;
  if (!label.empty() && label.front() == '(') {
    std::string canon = canonical_cycles(label);
    if (!canon.empty())
      for (int a = 0; a < n_; ++a)
        if (labels_[a] == canon) return a;
  }
  return -1;
}

int Group::word(std::string_view w) const {
  int r = 0;
  size_t i = 0;
  while (i < w.size()) {
    if (std::isspace(static_cast<unsigned char>(w[i])) || w[i] == '*') {
      ++i;
      continue;
    }
    if (w[i] == '1') {
      ++i;
      continue;
    }
    if (!std::isalpha(static_cast<unsigned char>(w[i])))
      fail(ErrorKind::Parse, "word: unexpected character");
    std::string name(1, w[i++]);
    while (i < w.size() && w[i] == '\'') name += w[i++];
    int gen = -1;
    for (const auto& [nm, e] : gen_names_)
      if (nm == name) gen = e;
    if (gen < 0) fail(ErrorKind::Parse, "word: unknown generator " + name);
    long long e = 1;
    if (i < w.size() && w[i] == '^') {
      ++i;
      bool neg = false;
      if (i < w.size() && w[i] == '-') {
        neg = true;
        ++i;
      }
      size_t start = i;
      e = 0;
      while (i < w.size() && std::isdigit(static_cast<unsigned char>(w[i])))
        e = e * 10 + (w[i++] - '0');
      if (i == start) fail(ErrorKind::Parse, "word: missing exponent");
      if (neg) e = -e;
    }
    r = mul(r, pow(gen, e));
  }
  return r;
}

int Subgroup::position(int g) const {
  auto it = std::lower_bound(members.begin(), members.end(), g);
  if (it == members.end() || *it != g) return -1;
  return static_cast<int>(it - members.begin());
}

bool subgroup_less(const Subgroup& a, const Subgroup& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return a.members < b.members;
}

bool is_subgroup(const Group& G, const std::vector<int>& members) {
  ElemSet m;
  for (int x : members) {
    if (x < 0 || x >= G.order()) return false;
    m.add(x);
  }
  if (!m.has(0)) return false;
  for (int a : members) {
    if (!m.has(G.inv(a))) return false;
    for (int b : members)
      if (!m.has(G.mul(a, b))) return false;
  }
  return true;
}

Subgroup make_subgroup(const Group& G, std::vector<int> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (!is_subgroup(G, members))
    fail(ErrorKind::Invalid, "member list is not a subgroup");
  Subgroup s;
  s.members = std::move(members);
  for (int x : s.members) s.mask.add(x);
  return s;
}

namespace {
Subgroup from_mask(const ElemSet& m, int n) {
  Subgroup s;
  s.mask = m;
  for (int i = 0; i < n; ++i)
    if (m.has(i)) s.members.push_back(i);
  return s;
}

// Closure of seed (already containing 1) under right multiplication by gens.
ElemSet close(const Group& G, ElemSet set, std::vector<int> queue,
              const std::vector<int>& gens) {
  for (size_t q = 0; q < queue.size(); ++q) {
    int x = queue[q];
    for (int g : gens) {
      int y = G.mul(x, g);
      if (!set.has(y)) {
        set.add(y);
        queue.push_back(y);
      }
    }
  }
  return set;
}
}  // namespace

Subgroup whole(const Group& G) {
  ElemSet m;
  for (int i = 0; i < G.order(); ++i) m.add(i);
  return from_mask(m, G.order());
}

Subgroup trivial_subgroup(const Group& G) {
  ElemSet m;
  m.add(0);
  return from_mask(m, G.order());
}

Subgroup generate(const Group& G, const std::vector<int>& gens) {
  ElemSet m;
  m.add(0);
  return from_mask(close(G, m, {0}, gens), G.order());
}

Subgroup join(const Group& G, const Subgroup& a, const Subgroup& b) {
  std::vector<int> gens = min_generating_set(G, a);
  for (int g : min_generating_set(G, b)) gens.push_back(g);
  return generate(G, gens);
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  ElemSet m = a.mask & b.mask;
  Subgroup s;
  s.mask = m;
  for (int x : a.members)
    if (m.has(x)) s.members.push_back(x);
  return s;
}

int product_size(const Subgroup& a, const Subgroup& b) {
  return a.order() * b.order() / (a.mask & b.mask).count();
}

std::vector<Subgroup> all_subgroups(const Group& G) {
  const int n = G.order();
  struct Entry {
    ElemSet mask;
    std::vector<int> members;
    std::vector<int> gens;
  };
  std::vector<Entry> list;
  std::unordered_set<ElemSet, ElemSetHash> seen;
  std::vector<int> cyclic_gens;
  for (int g = 0; g < n; ++g) {
    Subgroup c = generate(G, {g});
    if (seen.insert(c.mask).second) {
      list.push_back({c.mask, c.members, g == 0 ? std::vector<int>{}
                                                : std::vector<int>{g}});
      cyclic_gens.push_back(g);
    }
  }
  for (size_t idx = 0; idx < list.size(); ++idx) {
    for (int c : cyclic_gens) {
      if (list[idx].mask.has(c)) continue;
      std::vector<int> gens = list[idx].gens;
      gens.push_back(c);
      ElemSet m = close(G, list[idx].mask, list[idx].members, gens);
      if (seen.insert(m).second) {
        Subgroup s = from_mask(m, n);
        list.push_back({m, s.members, gens});
      }
    }
  }
  std::vector<Subgroup> out;
  out.reserve(list.size());
  for (auto& e : list) {
    Subgroup s;
    s.mask = e.mask;
    s.members = std::move(e.members);
    std::sort(s.members.begin(), s.members.end());
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), subgroup_less);
  return out;
}

int subgroup_index(const std::vector<Subgroup>& list, const Subgroup& s) {
  auto it = std::lower_bound(list.begin(), list.end(), s, subgroup_less);
  if (it == list.end() || !(*it == s)) return -1;
  return static_cast<int>(it - list.begin());
}

Subgroup conjugate(const Group& G, const Subgroup& s, int g) {
  ElemSet m;
  for (int x : s.members) m.add(G.conj(g, x));
  return from_mask(m, G.order());
}

Subgroup image(const Subgroup& s, const GroupMap& f, const Group& target) {
  ElemSet m;
  for (int x : s.members) m.add(f(x));
  return from_mask(m, target.order());
}

std::vector<std::vector<int>> conjugacy_partition(
    const Group& G, const std::vector<Subgroup>& items) {
  std::unordered_map<ElemSet, int, ElemSetHash> where;
  for (size_t i = 0; i < items.size(); ++i) {
    if (!is_subgroup(G, items[i].members))
      fail(ErrorKind::Invalid, "conjugacy_partition: foreign subgroup");
    where.emplace(items[i].mask, static_cast<int>(i));
  }
  std::vector<int> orbit_of(items.size(), -1);
  std::vector<std::vector<int>> orbits;
  for (size_t i = 0; i < items.size(); ++i) {
    if (orbit_of[i] >= 0) continue;
    std::vector<int> orbit;
    for (int g = 0; g < G.order(); ++g) {
      auto it = where.find(conjugate(G, items[i], g).mask);
      if (it == where.end() || orbit_of[it->second] >= 0) continue;
      orbit_of[it->second] = static_cast<int>(orbits.size());
      orbit.push_back(it->second);
    }
    std::sort(orbit.begin(), orbit.end(), [&](int a, int b) {
      if (items[a] == items[b]) return a < b;
      return subgroup_less(items[a], items[b]);
    });
    orbits.push_back(orbit);
  }
  std::sort(orbits.begin(), orbits.end(),
            [&](const std::vector<int>& a, const std::vector<int>& b) {
              return subgroup_less(items[a[0]], items[b[0]]);
            });
  return orbits;
}

std::vector<std::vector<int>> conjugacy_classes(const Group& G,
                                                const Subgroup& s) {
  ElemSet done;
  std::vector<std::vector<int>> classes;
  for (int x : s.members) {
    if (done.has(x)) continue;
    ElemSet cls;
    for (int g : s.members) cls.add(G.conj(g, x));
    std::vector<int> c;
    for (int y : s.members)
      if (cls.has(y)) {
        c.push_back(y);
        done.add(y);
      }
    classes.push_back(std::move(c));
  }
  return classes;
}

bool is_normal(const Group& G, const Subgroup& s) {
  for (int g = 0; g < G.order(); ++g)
    for (int x : s.members)
      if (!s.has(G.conj(g, x))) return false;
  return true;
}

bool is_abelian(const Group& G, const Subgroup& s) {
  for (int a : s.members)
    for (int b : s.members)
      if (G.mul(a, b) != G.mul(b, a)) return false;
  return true;
}

Subgroup center(const Group& G) {
  std::vector<int> m;
  for (int z = 0; z < G.order(); ++z) {
    bool central = true;
    for (int g = 0; g < G.order() && central; ++g)
      central = G.mul(z, g) == G.mul(g, z);
    if (central) m.push_back(z);
  }
  return make_subgroup(G, m);
}

Subgroup normalizer(const Group& G, const Subgroup& s) {
  std::vector<int> m;
  for (int g = 0; g < G.order(); ++g) {
    bool ok = true;
    for (int x : s.members)
      if (!s.has(G.conj(g, x))) {
        ok = false;
        break;
      }
    if (ok) m.push_back(g);
  }
  return make_subgroup(G, m);
}

Subgroup centralizer_in(const Group& G, const Subgroup& within, int g) {
  std::vector<int> m;
  for (int x : within.members)
    if (G.mul(x, g) == G.mul(g, x)) m.push_back(x);
  Subgroup s;
  s.members = m;
  for (int x : m) s.mask.add(x);
  return s;
}

Subgroup centralizer(const Group& G, int g) {
  return centralizer_in(G, whole(G), g);
}

Subgroup commutator_subgroup(const Group& G, const Subgroup& s) {
  ElemSet comms;
  std::vector<int> gens;
  for (int a : s.members)
    for (int b : s.members) {
      int c = G.commutator(a, b);
      if (!comms.has(c)) {
        comms.add(c);
        gens.push_back(c);
      }
    }
  return generate(G, gens);
}

Quotient quotient(const Group& G, const Subgroup& normal) {
  if (!is_normal(G, normal))
    fail(ErrorKind::Invalid, "quotient by a non-normal subgroup");
  const int n = G.order();
  Quotient q;
  q.projection.assign(n, -1);
  for (int g = 0; g < n; ++g) {
    if (q.projection[g] >= 0) continue;
    int id = static_cast<int>(q.lift.size());
    q.lift.push_back(g);
    for (int k : normal.members) q.projection[G.mul(g, k)] = id;
  }
  const int m = static_cast<int>(q.lift.size());
  std::vector<int> t(m * m);
  std::vector<std::string> labels(m);
  for (int a = 0; a < m; ++a) {
    labels[a] = "[" + G.label(q.lift[a]) + "]";
    for (int b = 0; b < m; ++b)
      t[a * m + b] = q.projection[G.mul(q.lift[a], q.lift[b])];
  }
  q.group = Group::trusted(m, std::move(t), std::move(labels),
                           G.provenance() + " / N");
  return q;
}

Group subgroup_group(const Group& G, const Subgroup& s) {
  const int m = s.order();
  std::vector<int> t(m * m);
  std::vector<std::string> labels(m);
  for (int i = 0; i < m; ++i) {
    labels[i] = G.label(s.members[i]);
    for (int j = 0; j < m; ++j)
      t[i * m + j] = s.position(G.mul(s.members[i], s.members[j]));
  }
  return Group::trusted(m, std::move(t), std::move(labels),
                        "subgroup of " + G.provenance());
}

std::vector<int> min_generating_set(const Group& G, const Subgroup& s) {
  std::vector<int> gens;
  ElemSet cur;
  cur.add(0);
  int cur_size = 1;
  while (cur_size < s.order()) {
    int best = -1, best_size = 0;
    ElemSet best_set;
    std::vector<int> seed;
    for (int i = 0; i < G.order(); ++i)
      if (cur.has(i)) seed.push_back(i);
    for (int x : s.members) {
      if (cur.has(x)) continue;
      std::vector<int> trial = gens;
      trial.push_back(x);
      ElemSet m = close(G, cur, seed, trial);
      int sz = m.count();
      if (sz > best_size) {
        best = x;
        best_size = sz;
        best_set = m;
        if (sz == s.order()) break;
      }
    }
    gens.push_back(best);
    cur = best_set;
    cur_size = best_size;
  }
  return gens;
}

std::vector<int> min_generating_set(const Group& G) {
  return min_generating_set(G, whole(G));
}

std::vector<DoubleCoset> double_cosets(const Group& G, const Subgroup& F,
                                       const Subgroup& Gamma) {
  ElemSet covered;
  std::vector<DoubleCoset> out;
  for (int g = 0; g < G.order(); ++g) {
    if (covered.has(g)) continue;
    ElemSet dc;
    for (int f : F.members) {
      int fg = G.mul(f, g);
      for (int h : Gamma.members) dc.add(G.mul(fg, h));
    }
    for (int i = 0; i < 4; ++i) covered.w[i] |= dc.w[i];
    DoubleCoset d;
    d.representative = g;
    d.size = dc.count();
    d.stabilizer = intersect(F, conjugate(G, Gamma, g));
    out.push_back(std::move(d));
  }
  return out;
}

}  // namespace gth
