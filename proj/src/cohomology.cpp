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

#include "gth/cohomology.hpp"

#include <algorithm>
#include <map>

#include "zmod.hpp"

namespace gth {

namespace {

bool sylow_cyclic(const Group& G, int p) {
  int pk = 1, n = G.order();
  while (n % p == 0) {
    n /= p;
    pk *= p;
  }
  if (pk == 1) return true;
  for (int g = 0; g < G.order(); ++g)
    if (G.elem_order(g) == pk) return true;
  return false;
}

}  // namespace

Cocycle2 Cocycle2::trivial(int n, int modulus) {
  return Cocycle2{modulus, n, std::vector<int>(static_cast<size_t>(n) * n, 0)};
}

bool satisfies_cocycle(const Group& G, const Cocycle2& c) {
  const int n = G.order();
  if (c.n != n) return false;
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      int gh = G.mul(g, h);
      int lhs0 = c(g, h);
      for (int l = 0; l < n; ++l) {
        long long lhs = lhs0 + c(gh, l);
        long long rhs = c(h, l) + c(g, G.mul(h, l));
        if ((lhs - rhs) % c.modulus) return false;
      }
    }
  return true;
}

bool is_normalized(const Cocycle2& c) {
  for (int g = 0; g < c.n; ++g)
    if (c(0, g) || c(g, 0)) return false;
  return true;
}

Cocycle2 coboundary(const Group& G, const std::vector<int>& u, int modulus) {
  Cocycle2 c = Cocycle2::trivial(G.order(), modulus);
  for (int g = 0; g < G.order(); ++g)
    for (int h = 0; h < G.order(); ++h)
      c.at(g, h) =
          static_cast<int>(mod_pos(static_cast<long long>(u[g]) + u[h] - u[G.mul(g, h)], modulus));
  return c;
}

Cocycle2 lift_modulus(const Cocycle2& c, int modulus) {
  if (modulus % c.modulus)
    fail(ErrorKind::Invalid, "lift_modulus: target modulus is not a multiple");
  Cocycle2 r = c;
  r.modulus = modulus;
  int f = modulus / c.modulus;
  for (int& v : r.table) v *= f;
  return r;
}

Cocycle2 product(const Cocycle2& a, const Cocycle2& b) {
  if (a.n != b.n) fail(ErrorKind::Invalid, "cocycle product: different groups");
  int m = static_cast<int>(lcm64(a.modulus, b.modulus));
  Cocycle2 x = lift_modulus(a, m), y = lift_modulus(b, m);
  for (size_t i = 0; i < x.table.size(); ++i) x.table[i] = (x.table[i] + y.table[i]) % m;
  return x;
}

Cocycle2 power(const Cocycle2& a, long long k) {
  Cocycle2 r = a;
  for (int& v : r.table) v = static_cast<int>(mod_pos(v * (k % a.modulus), a.modulus));
  return r;
}

Cocycle2 pullback(const Cocycle2& c, const GroupMap& f) {
  int n = static_cast<int>(f.img.size());
  Cocycle2 r = Cocycle2::trivial(n, c.modulus);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) r.at(a, b) = c(f(a), f(b));
  return r;
}

Cocycle2 pushforward(const Cocycle2& c, const GroupMap& theta) {
  Cocycle2 r = Cocycle2::trivial(c.n, c.modulus);
  for (int a = 0; a < c.n; ++a)
    for (int b = 0; b < c.n; ++b) r.at(theta(a), theta(b)) = c(a, b);
  return r;
}

Cocycle2 restrict_to(const Cocycle2& c, const Subgroup& F) {
  int k = F.order();
  Cocycle2 r = Cocycle2::trivial(k, c.modulus);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) r.at(i, j) = c(F.members[i], F.members[j]);
  return r;
}

Cocycle2 f_chi(int n) {
  if (n % 2) fail(ErrorKind::Invalid, "f_chi needs n even");
  Cocycle2 c = Cocycle2::trivial(2 * n, n);
  for (int a = 0; a < 2 * n; ++a)
    for (int b = 0; b < 2 * n; ++b) c.at(a, b) = (b % n) * (a / n) % n;
  return c;
}

int regular_class_count(const Group& G, const Cocycle2& c) {
  int count = 0;
  for (const auto& cls : conjugacy_classes(G, whole(G))) {
    int g = cls.front();
    bool regular = true;
    for (int x : centralizer(G, g).members)
      if ((c(g, x) - c(x, g)) % c.modulus) {
        regular = false;
        break;
      }
    count += regular;
  }
  return count;
}

bool is_nondegenerate(const Group& G, const Cocycle2& c) {
  return regular_class_count(G, c) == 1;
}

bool alternating_form_nondegenerate(const Group& G, const Cocycle2& c) {
  for (int x = 1; x < G.order(); ++x) {
    bool radical = true;
    for (int y = 0; y < G.order() && radical; ++y)
      if ((c(x, y) - c(y, x)) % c.modulus) radical = false;
    if (radical) return false;
  }
  return true;
}

// Per-prime data: kernel coordinates and the quotient presentation.
struct CohomologyGroup::PrimePart {
  int p = 0, a = 0, q = 1;
  long long scale = 1, scale_inv = 1;  // m / q and its inverse mod q
  LocalMat V, Vinv;
  std::vector<int> kcol, kshift, korder;  // kernel generators
  LocalMat Cm, Cinv;                      // quotient change of basis
  std::vector<int> out, out_order;        // surviving components

  std::vector<int> z_coords(const std::vector<long long>& x) const {
    const int U = V.rows;
    std::vector<int> z(kcol.size());
    for (size_t i = 0; i < kcol.size(); ++i) {
      long long y = 0;
      for (int k = 0; k < U; ++k) y += static_cast<long long>(Vinv.at(kcol[i], k)) * x[k];
      y = mod_pos(y, q);
      if (y % kshift[i])
        fail(ErrorKind::Internal, "cochain is not a cocycle");
      z[i] = static_cast<int>(y / kshift[i] % korder[i]);
    }
    return z;
  }
  std::vector<int> coefficients(const std::vector<int>& z) const {
    std::vector<int> c(out.size());
    for (size_t j = 0; j < out.size(); ++j) {
      long long s = 0;
      for (size_t i = 0; i < z.size(); ++i) s += static_cast<long long>(z[i]) * Cm.at(i, out[j]);
      c[j] = static_cast<int>(mod_pos(s, out_order[j]));
    }
    return c;
  }
  // x-vector (mod q) of the j-th surviving generator.
  std::vector<long long> generator_x(size_t j) const {
    const int U = V.rows;
    std::vector<long long> x(U, 0);
    for (size_t i = 0; i < kcol.size(); ++i) {
      long long c = Cinv.at(out[j], i);
      if (!c) continue;
      c = c * kshift[i] % q;
      for (int k = 0; k < U; ++k) x[k] = (x[k] + c * V.at(k, kcol[i])) % q;
    }
    return x;
  }
};

CohomologyGroup::CohomologyGroup(const Group& G, int modulus)
    : group_(G), modulus_(modulus) {
  if (modulus < 1) fail(ErrorKind::Invalid, "modulus must be positive");
  const int n = G.order();
  gens_ = min_generating_set(G);
  const int S = static_cast<int>(gens_.size());
  const int U = (n - 1) * S;
  auto var = [S](int g, int s) { return (g - 1) * S + s; };

  // BFS spanning tree under right multiplication by generators.
  parent_.assign(n, -1);
  parent_gen_.assign(n, -1);
  std::vector<std::vector<bool>> tree_edge(n, std::vector<bool>(S, false));
  bfs_order_ = {0};
  std::vector<bool> seen(n, false);
  seen[0] = true;
  for (size_t i = 0; i < bfs_order_.size(); ++i) {
    int h = bfs_order_[i];
    for (int s = 0; s < S; ++s) {
      int hs = G.mul(h, gens_[s]);
      if (seen[hs]) continue;
      seen[hs] = true;
      parent_[hs] = h;
      parent_gen_[hs] = s;
      tree_edge[h][s] = true;
      bfs_order_.push_back(hs);
    }
  }

  // Carry cocycles from the generating characters of G_ab.
  Quotient ab = quotient(G, commutator_subgroup(G, whole(G)));
  AbelianShape shape = abelian_shape(ab.group, whole(ab.group));
  auto coords = shape_coordinates(ab.group, whole(ab.group), shape);
  for (size_t i = 0; i < shape.factors.size(); ++i) {
    Cocycle2 c = Cocycle2::trivial(n, modulus);
    int d = shape.factors[i];
    for (int g = 0; g < n; ++g)
      for (int h = 0; h < n; ++h) {
        int v = coords[ab.projection[g]][i] + coords[ab.projection[h]][i] -
                coords[ab.projection[G.mul(g, h)]][i];
        c.at(g, h) = static_cast<int>(mod_pos(v / d, modulus));
      }
    carries_.push_back(std::move(c));
  }

  for (auto [p, e] : factorize(modulus)) {
    if (n % p || sylow_cyclic(G, p)) continue;
    auto part = std::make_shared<PrimePart>();
    part->p = p;
    part->a = e;
    part->q = static_cast<int>(ipow(p, e));
    const int q = part->q;
    part->scale = modulus / q;
    part->scale_inv = mod_inverse(part->scale % q, q);

    // Cocycle equations: for g != 1 and every non-tree edge (h, s), the tree
    // telescoping of alpha(g, h s) must match alpha(g, h) + x(gh, s) - x(h, s).
    StreamingEchelon ech(U, p, e, q);
    std::vector<std::vector<std::pair<int, int>>> path(n);  // (node, gen)
    for (size_t i = 1; i < bfs_order_.size(); ++i) {
      int h = bfs_order_[i];
      path[h] = path[parent_[h]];
      path[h].emplace_back(parent_[h], parent_gen_[h]);
    }
    std::vector<int> row(U);
    auto addx = [&](int g, int s, int c) {
      if (g != 0) row[var(g, s)] = static_cast<int>(mod_pos(row[var(g, s)] + c, q));
    };
    auto add_tree = [&](int g, int h, int sign) {
      for (auto [v, s] : path[h]) {
        addx(G.mul(g, v), s, sign);
        addx(v, s, -sign);
      }
    };
    for (int g = 1; g < n; ++g)
      for (int h = 0; h < n; ++h)
        for (int s = 0; s < S; ++s) {
          if (tree_edge[h][s]) continue;
          std::fill(row.begin(), row.end(), 0);
          add_tree(g, h, 1);
          addx(G.mul(g, h), s, 1);
          addx(h, s, -1);
          add_tree(g, G.mul(h, gens_[s]), -1);
          ech.insert(row);
        }
    LocalSmith eq = local_smith(ech.matrix(), p, e, q);
    part->V = std::move(eq.V);
    part->Vinv = std::move(eq.Vinv);
    for (int i = 0; i < U; ++i) {
      int d = eq.diag[i];
      int v = d == 0 ? e : valuation(d, p, e);
      if (v == 0) continue;
      part->kcol.push_back(i);
      part->kshift.push_back(static_cast<int>(ipow(p, e - v)));
      part->korder.push_back(static_cast<int>(ipow(p, v)));
    }
    const int K = static_cast<int>(part->kcol.size());

    // Relations: coboundaries of point masses, carries, generator orders.
    LocalMat rel;
    rel.cols = K;
    auto add_rel = [&](const std::vector<int>& z) {
      rel.d.insert(rel.d.end(), z.begin(), z.end());
      ++rel.rows;
    };
    std::vector<long long> x(U);
    for (int h = 1; h < n; ++h) {
      for (int g = 1; g < n; ++g)
        for (int s = 0; s < S; ++s)
          x[var(g, s)] = (g == h) + (gens_[s] == h) - (G.mul(g, gens_[s]) == h);
      for (auto& v : x) v = mod_pos(v, q);
      add_rel(part->z_coords(x));
    }
    for (const auto& c : carries_) {
      for (int g = 1; g < n; ++g)
        for (int s = 0; s < S; ++s) x[var(g, s)] = c(g, gens_[s]) % q;
      add_rel(part->z_coords(x));
    }
    for (int i = 0; i < K; ++i) {
      std::vector<int> z(K, 0);
      z[i] = part->korder[i] % q;
      add_rel(z);
    }
    LocalSmith qs = local_smith(rel, p, e, q);
    part->Cm = std::move(qs.V);
    part->Cinv = std::move(qs.Vinv);
    for (int j = 0; j < K; ++j) {
      int d = qs.diag[j];
      int v = d == 0 ? e : valuation(d, p, e);
      if (v == 0) continue;
      part->out.push_back(j);
      part->out_order.push_back(static_cast<int>(ipow(p, v)));
    }
    if (part->out.empty()) continue;
    for (size_t j = 0; j < part->out.size(); ++j) {
      factors_.push_back(part->out_order[j]);
      std::vector<long long> gx = part->generator_x(j);
      for (auto& v : gx) v = v * part->scale % modulus;
      basis_.push_back(expand(gx, modulus));
    }
    parts_.push_back(std::move(part));
  }
}

std::vector<int> CohomologyGroup::x_vector(const Cocycle2& c) const {
  const int n = group_.order(), S = static_cast<int>(gens_.size());
  std::vector<int> x(static_cast<size_t>(n - 1) * S);
  for (int g = 1; g < n; ++g)
    for (int s = 0; s < S; ++s) x[(g - 1) * S + s] = c(g, gens_[s]);
  return x;
}

Cocycle2 CohomologyGroup::expand(const std::vector<long long>& x, int m) const {
  const int n = group_.order(), S = static_cast<int>(gens_.size());
  auto xv = [&](int g, int s) -> long long { return g ? x[(g - 1) * S + s] : 0; };
  Cocycle2 c = Cocycle2::trivial(n, m);
  for (int g = 0; g < n; ++g)
    for (size_t i = 1; i < bfs_order_.size(); ++i) {
      int h = bfs_order_[i], p = parent_[h], s = parent_gen_[h];
      c.at(g, h) = static_cast<int>(
          mod_pos(c(g, p) + xv(group_.mul(g, p), s) - xv(p, s), m));
    }
  return c;
}

std::vector<int> CohomologyGroup::classify(const Cocycle2& c) const {
  if (c.n != group_.order())
    fail(ErrorKind::Invalid, "classify: cocycle on a different group");
  if (modulus_ % c.modulus)
    fail(ErrorKind::Invalid, "classify: cocycle modulus does not divide the context");
  std::vector<int> x = x_vector(lift_modulus(c, modulus_));
  std::vector<int> out;
  for (const auto& part : parts_) {
    // p-component of the mu_m-valued cochain, as values in Z/q.
    std::vector<long long> y(x.size());
    for (size_t k = 0; k < x.size(); ++k) y[k] = x[k] % part->q * part->scale_inv % part->q;
    auto coeff = part->coefficients(part->z_coords(y));
    out.insert(out.end(), coeff.begin(), coeff.end());
  }
  return out;
}

Cocycle2 CohomologyGroup::representative(const std::vector<int>& v) const {
  if (v.size() != factors_.size())
    fail(ErrorKind::Invalid, "representative: wrong vector length");
  Cocycle2 c = Cocycle2::trivial(group_.order(), modulus_);
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i]) c = product(c, power(basis_[i], v[i]));
  return c;
}

std::vector<int> CohomologyGroup::invariant_factors() const {
  std::map<int, std::vector<int>> by_prime;
  for (int f : factors_) by_prime[factorize(f).front().first].push_back(f);
  size_t rank = 0;
  for (auto& [p, v] : by_prime) {
    std::sort(v.rbegin(), v.rend());
    rank = std::max(rank, v.size());
  }
  std::vector<int> out(rank, 1);
  for (auto& [p, v] : by_prime)
    for (size_t i = 0; i < v.size(); ++i) out[i] *= v[i];
  std::reverse(out.begin(), out.end());
  return out;
}

long long CohomologyGroup::size() const {
  long long s = 1;
  for (int f : factors_) s *= f;
  return s;
}

std::vector<int> CohomologyGroup::add(const std::vector<int>& a,
                                      const std::vector<int>& b) const {
  if (a.size() != factors_.size() || b.size() != factors_.size())
    fail(ErrorKind::Invalid, "class vectors from different groups");
  std::vector<int> r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = (a[i] + b[i]) % factors_[i];
  return r;
}

std::vector<int> CohomologyGroup::negate(const std::vector<int>& a) const {
  if (a.size() != factors_.size())
    fail(ErrorKind::Invalid, "class vector from a different group");
  std::vector<int> r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = (factors_[i] - a[i]) % factors_[i];
  return r;
}

std::vector<int> CohomologyGroup::ratio(const std::vector<int>& a,
                                        const std::vector<int>& b) const {
  return add(a, negate(b));
}

bool CohomologyGroup::is_trivial(const std::vector<int>& v) const {
  return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
}

long long CohomologyGroup::index_of(const std::vector<int>& v) const {
  long long idx = 0;
  for (size_t i = 0; i < v.size(); ++i) idx = idx * factors_[i] + v[i];
  return idx;
}

std::vector<int> CohomologyGroup::vector_at(long long index) const {
  std::vector<int> v(factors_.size());
  for (size_t i = factors_.size(); i-- > 0;) {
    v[i] = static_cast<int>(index % factors_[i]);
    index /= factors_[i];
  }
  return v;
}

std::optional<std::vector<int>> catalog_h2(const Group& G) {
  std::string name = identify(G);
  auto starts = [&](const char* pre) { return name.rfind(pre, 0) == 0; };
  auto number_after = [&](size_t pos) { return std::stoi(name.substr(pos)); };
  bool simple_name = name.find(' ') == std::string::npos && name.find(':') == std::string::npos;
  if (is_abelian(G, whole(G))) {
    AbelianShape s = abelian_shape(G, whole(G));
    // prod_{i<j} C_{gcd(n_i, n_j)} = prod_i C_{n_i}^(k-1-i) for n_i | n_j.
    std::vector<int> comps;
    const size_t k = s.factors.size();
    for (size_t i = 0; i + 1 < k; ++i)
      for (size_t j = i + 1; j < k; ++j) comps.push_back(s.factors[i]);
    std::map<int, std::vector<int>> by_prime;
    for (int c : comps)
      for (auto [p, e] : factorize(c)) by_prime[p].push_back(static_cast<int>(ipow(p, e)));
    size_t rank = 0;
    for (auto& [p, v] : by_prime) {
      std::sort(v.rbegin(), v.rend());
      rank = std::max(rank, v.size());
    }
    std::vector<int> out(rank, 1);
    for (auto& [p, v] : by_prime)
      for (size_t i = 0; i < v.size(); ++i) out[i] *= v[i];
    std::reverse(out.begin(), out.end());
    return out;
  }
  if (!simple_name) return std::nullopt;
  if (starts("D")) {
    int n = number_after(1);
    return n % 2 ? std::vector<int>{} : std::vector<int>{2};
  }
  if (starts("S")) {
    int n = number_after(1);
    return n >= 4 ? std::vector<int>{2} : std::vector<int>{};
  }
  if (starts("A")) {
    int n = number_after(1);
    if (n == 4 || n == 5) return std::vector<int>{2};
  }
  return std::nullopt;
}

}  // namespace gth
