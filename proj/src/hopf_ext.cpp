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
#include <cmath>
#include <complex>
#include <map>
#include <numeric>
#include <random>

#include <Eigen/Dense>

#include "gth/hopf.hpp"
#include "json.hpp"
#include "zmod.hpp"

namespace gth {

namespace {

using LongVec = std::vector<std::pair<long long, CycScalar>>;

class Acc {
 public:
  explicit Acc(int conductor) : n_(conductor) {}
  void add(long long key, const CycScalar& c) {
    auto [it, inserted] = m_.try_emplace(key, c);
    if (!inserted) it->second += c;
  }
  LongVec take() const {
    LongVec out;
    for (const auto& [k, v] : m_)
      if (!v.is_zero()) out.emplace_back(k, v);
    return out;
  }
  SparseVec sparse() const {
    SparseVec out;
    for (const auto& [k, v] : m_)
      if (!v.is_zero()) out.emplace_back(static_cast<int>(k), v);
    return out;
  }

 private:
  int n_;
  std::map<long long, CycScalar> m_;
};

bool same(const LongVec& a, const LongVec& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i].first != b[i].first || !(a[i].second == b[i].second)) return false;
  return true;
}

LongVec widen(const SparseVec& v) {
  LongVec out;
  for (const auto& [k, c] : v) out.emplace_back(k, c);
  return out;
}

// Characters of K as exponent vectors mod M (M a multiple of exp K^ab).
std::vector<std::vector<int>> character_exponents(const Group& K, int M) {
  Subgroup derived = commutator_subgroup(K, whole(K));
  Quotient Q = quotient(K, derived);
  Subgroup all = whole(Q.group);
  AbelianShape shape = abelian_shape(Q.group, all);
  auto coords = shape_coordinates(Q.group, all, shape);
  std::vector<std::vector<int>> out;
  std::vector<int> c(shape.factors.size(), 0);
  for (;;) {
    std::vector<int> chi(K.order());
    for (int k = 0; k < K.order(); ++k)
      chi[k] = character_pairing(shape, c, coords[Q.projection[k]], M);
    out.push_back(std::move(chi));
    size_t i = 0;
    while (i < c.size() && ++c[i] == shape.factors[i]) c[i++] = 0;
    if (i == c.size()) break;
  }
  return out;
}

int exponent_of(const Group& K) {
  int e = 1;
  for (int k = 0; k < K.order(); ++k) e = static_cast<int>(lcm64(e, K.elem_order(k)));
  return e;
}

// Exponents x with x_u + x_v - x_{uv} = rhs(u, v) mod M over the group K.
std::optional<std::vector<long long>> solve_twisted_character(
    const Group& K, long long M, const std::function<long long(int, int)>& rhs) {
  const int n = K.order();
  std::vector<std::vector<long long>> A;
  std::vector<long long> b;
  A.reserve(static_cast<size_t>(n) * n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      std::vector<long long> row(n, 0);
      row[u] += 1;
      row[v] += 1;
      row[K.mul(u, v)] -= 1;
      A.push_back(std::move(row));
      b.push_back(rhs(u, v));
    }
  return solve_mod(A, b, n, M);
}

std::string witness(const HopfStructure& H, std::initializer_list<int> idx) {
  std::string s = "(";
  bool first = true;
  for (int i : idx) {
    if (!first) s += ", ";
    first = false;
    s += H.basis[i];
  }
  return s + ")";
}

}  // namespace

MatchedPairData matched_pair_from_factorization(const Group& G, const Subgroup& F,
                                                const Subgroup& Gamma) {
  if (intersect(F, Gamma).order() != 1)
    fail(ErrorKind::Invalid, "matched pair: F and Gamma intersect non-trivially");
  if (static_cast<long long>(F.order()) * Gamma.order() != G.order())
    fail(ErrorKind::Invalid, "matched pair: |F| |Gamma| differs from |G|");
  MatchedPairData mp;
  mp.F = subgroup_group(G, F);
  mp.Gamma = subgroup_group(G, Gamma);
  const int nF = F.order(), nG = Gamma.order();
  std::vector<std::pair<int, int>> split(G.order(), {-1, -1});
  for (int a = 0; a < nF; ++a)
    for (int b = 0; b < nG; ++b) split[G.mul(F.members[a], Gamma.members[b])] = {a, b};
  mp.left.resize(static_cast<size_t>(nG) * nF);
  mp.right.resize(static_cast<size_t>(nG) * nF);
  for (int g = 0; g < nG; ++g)
    for (int f = 0; f < nF; ++f) {
      auto [a, b] = split[G.mul(Gamma.members[g], F.members[f])];
      mp.left[g * nF + f] = a;
      mp.right[g * nF + f] = b;
    }
  mp.conductor = 1;
  mp.sigma.assign(static_cast<size_t>(nG) * nF * nF, 0);
  mp.tau.assign(static_cast<size_t>(nF) * nG * nG, 0);
  mp.note = "factorization of " + G.provenance();
  return mp;
}

MatchedPairData a18_matched_pair(int e) {
  if (e != 1 && e != 2) fail(ErrorKind::Invalid, "A18: xi must be a primitive cube root");
  MatchedPairData mp;
  mp.F = construct("C 2");
  mp.Gamma = construct("C 3 x C 3");
  // Gamma index 3 i + j is a^i b^j; F index 1 is x.
  std::vector<std::string> labels(9);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      std::string s;
      if (i) s += i == 1 ? "a" : "a^2";
      if (j) s += std::string(s.empty() ? "" : " ") + (j == 1 ? "b" : "b^2");
      labels[3 * i + j] = s.empty() ? "1" : s;
    }
  mp.Gamma = Group::trusted(9, mp.Gamma.table(), labels, "C 3 x C 3");
  mp.Gamma.set_generator_names({{"a", 3}, {"b", 1}});
  std::vector<std::string> flabels = {"1", "x"};
  mp.F = Group::trusted(2, mp.F.table(), flabels, "C 2");
  mp.F.set_generator_names({{"x", 1}});
  mp.left.resize(18);
  mp.right.resize(18);
  for (int g = 0; g < 9; ++g) {
    int i = g / 3, j = g % 3;
    mp.left[g * 2 + 0] = 0;
    mp.left[g * 2 + 1] = 1;
    mp.right[g * 2 + 0] = g;
    mp.right[g * 2 + 1] = 3 * i + (3 - j) % 3;
  }
  mp.conductor = 3;
  mp.sigma.assign(9 * 2 * 2, 0);
  mp.tau.assign(2 * 9 * 9, 0);
  for (int g1 = 0; g1 < 9; ++g1)
    for (int g2 = 0; g2 < 9; ++g2) {
      int j = g1 % 3, r = g2 / 3;
      mp.tau[(1 * 9 + g1) * 9 + g2] = (e * j * r) % 3;
    }
  mp.note = "A18 with xi = zeta_3^" + std::to_string(e);
  return mp;
}

std::optional<std::string> check_matched_pair(const MatchedPairData& mp) {
  const Group& F = mp.F;
  const Group& Gm = mp.Gamma;
  const int nF = F.order(), nG = Gm.order();
  const int N = mp.conductor;
  auto bad = [](const std::string& law, int a, int b, int c) {
    return law + " fails at (" + std::to_string(a) + ", " + std::to_string(b) + ", " +
           std::to_string(c) + ")";
  };
  if (mp.left.size() != static_cast<size_t>(nG) * nF ||
      mp.right.size() != static_cast<size_t>(nG) * nF ||
      mp.sigma.size() != static_cast<size_t>(nG) * nF * nF ||
      mp.tau.size() != static_cast<size_t>(nF) * nG * nG)
    return std::string("table sizes do not match |F| and |Gamma|");
  for (int g = 0; g < nG; ++g)
    for (int f = 0; f < nF; ++f) {
      int l = mp.act_left(g, f), r = mp.act_right(g, f);
      if (l < 0 || l >= nF || r < 0 || r >= nG) return bad("action range", g, f, 0);
    }
  for (int f = 0; f < nF; ++f) {
    if (mp.act_left(0, f) != f) return bad("unit of |>", 0, f, 0);
    if (mp.act_right(0, f) != 0) return bad("1 <| f = 1", 0, f, 0);
  }
  for (int g = 0; g < nG; ++g) {
    if (mp.act_left(g, 0) != 0) return bad("g |> 1 = 1", g, 0, 0);
    if (mp.act_right(g, 0) != g) return bad("unit of <|", g, 0, 0);
  }
  for (int g = 0; g < nG; ++g)
    for (int h = 0; h < nG; ++h)
      for (int f = 0; f < nF; ++f) {
        if (mp.act_left(Gm.mul(g, h), f) != mp.act_left(g, mp.act_left(h, f)))
          return bad("|> is a left action", g, h, f);
        if (mp.act_right(Gm.mul(g, h), f) !=
            Gm.mul(mp.act_right(g, mp.act_left(h, f)), mp.act_right(h, f)))
          return bad("(gh) <| f", g, h, f);
      }
  for (int g = 0; g < nG; ++g)
    for (int f = 0; f < nF; ++f)
      for (int f2 = 0; f2 < nF; ++f2) {
        if (mp.act_right(g, F.mul(f, f2)) != mp.act_right(mp.act_right(g, f), f2))
          return bad("<| is a right action", g, f, f2);
        if (mp.act_left(g, F.mul(f, f2)) !=
            F.mul(mp.act_left(g, f), mp.act_left(mp.act_right(g, f), f2)))
          return bad("g |> (f f')", g, f, f2);
      }
  auto ez = [N](long long x) { return mod_pos(x, N); };
  for (int g = 0; g < nG; ++g)
    for (int f = 0; f < nF; ++f)
      if (ez(mp.sigma_exp(g, 0, f)) || ez(mp.sigma_exp(g, f, 0)))
        return bad("sigma normalized", g, f, 0);
  for (int f = 0; f < nF; ++f)
    for (int g = 0; g < nG; ++g)
      if (ez(mp.tau_exp(f, 0, g)) || ez(mp.tau_exp(f, g, 0)))
        return bad("tau normalized", f, g, 0);
  for (int f = 0; f < nF; ++f)
    for (int f2 = 0; f2 < nF; ++f2)
      if (ez(mp.sigma_exp(0, f, f2))) return bad("sigma_1 trivial", 0, f, f2);
  for (int g = 0; g < nG; ++g)
    for (int h = 0; h < nG; ++h)
      if (ez(mp.tau_exp(0, g, h))) return bad("tau_1 trivial", 0, g, h);
  for (int g = 0; g < nG; ++g)
    for (int f = 0; f < nF; ++f)
      for (int f2 = 0; f2 < nF; ++f2)
        for (int f3 = 0; f3 < nF; ++f3) {
          long long lhs = mp.sigma_exp(g, f, f2) + mp.sigma_exp(g, F.mul(f, f2), f3);
          long long rhs = mp.sigma_exp(mp.act_right(g, f), f2, f3) +
                          mp.sigma_exp(g, f, F.mul(f2, f3));
          if (ez(lhs - rhs)) return bad("sigma cocycle", g, f, f2);
        }
  for (int f = 0; f < nF; ++f)
    for (int m1 = 0; m1 < nG; ++m1)
      for (int m2 = 0; m2 < nG; ++m2)
        for (int v = 0; v < nG; ++v) {
          long long lhs = mp.tau_exp(f, Gm.mul(m1, m2), v) +
                          mp.tau_exp(mp.act_left(v, f), m1, m2);
          long long rhs = mp.tau_exp(f, m1, Gm.mul(m2, v)) + mp.tau_exp(f, m2, v);
          if (ez(lhs - rhs)) return bad("tau cocycle", f, m1, m2);
        }
  // Compatibility of sigma and tau (multiplicativity of the coproduct).
  for (int f = 0; f < nF; ++f)
    for (int f2 = 0; f2 < nF; ++f2)
      for (int g1 = 0; g1 < nG; ++g1)
        for (int g2 = 0; g2 < nG; ++g2) {
          int g = Gm.mul(g1, g2);
          int g2f = mp.act_left(g2, f), g2r = mp.act_right(g2, f);
          long long lhs = mp.sigma_exp(g, f, f2) + mp.tau_exp(F.mul(f, f2), g1, g2);
          long long rhs = mp.tau_exp(f, g1, g2) +
                          mp.tau_exp(f2, mp.act_right(g1, g2f), g2r) +
                          mp.sigma_exp(g1, g2f, mp.act_left(g2r, f2)) +
                          mp.sigma_exp(g2, f, f2);
          if (ez(lhs - rhs)) return bad("sigma/tau compatibility", f, f2, g1);
        }
  return std::nullopt;
}

HopfStructure bicrossed(const MatchedPairData& mp) {
  if (auto err = check_matched_pair(mp)) fail(ErrorKind::Invalid, "matched pair: " + *err);
  const int nF = mp.F.order(), nG = mp.Gamma.order();
  const int dim = nF * nG, N = mp.conductor;
  HopfStructure H;
  H.dim = dim;
  H.conductor = N;
  H.basis.resize(dim);
  for (int g = 0; g < nG; ++g)
    for (int f = 0; f < nF; ++f)
      H.basis[g * nF + f] = "d_" + mp.Gamma.label(g) + "#" + mp.F.label(f);
  H.mult.assign(static_cast<size_t>(dim) * dim, {});
  for (int g = 0; g < nG; ++g)
    for (int f = 0; f < nF; ++f) {
      int a = g * nF + f, g2 = mp.act_right(g, f);
      for (int f2 = 0; f2 < nF; ++f2)
        H.mult[static_cast<size_t>(a) * dim + g2 * nF + f2] = {
            {g * nF + mp.F.mul(f, f2), CycScalar::root(N, mp.sigma_exp(g, f, f2))}};
    }
  for (int g = 0; g < nG; ++g) H.unit.emplace_back(g * nF, CycScalar::rational(N, 1));
  H.comult.resize(dim);
  for (int g = 0; g < nG; ++g)
    for (int f = 0; f < nF; ++f) {
      SparseVec& out = H.comult[g * nF + f];
      for (int g1 = 0; g1 < nG; ++g1) {
        int g2 = mp.Gamma.mul(mp.Gamma.inv(g1), g);
        int left = g1 * nF + mp.act_left(g2, f), right = g2 * nF + f;
        out.emplace_back(left * dim + right, CycScalar::root(N, mp.tau_exp(f, g1, g2)));
      }
      std::sort(out.begin(), out.end(),
                [](const auto& x, const auto& y) { return x.first < y.first; });
    }
  H.counit.assign(dim, CycScalar(N));
  for (int f = 0; f < nF; ++f) H.counit[f] = CycScalar::rational(N, 1);
  H.antipode = solve_antipode(H);
  H.source = std::make_shared<const MatchedPairData>(mp);
  return H;
}

HopfStructure group_algebra(const Group& G) {
  MatchedPairData mp = matched_pair_from_factorization(G, whole(G), trivial_subgroup(G));
  mp.note = "group algebra of " + G.provenance();
  HopfStructure H = bicrossed(mp);
  H.basis = G.labels();
  return H;
}

HopfStructure dual(const HopfStructure& H) {
  const int dim = H.dim;
  HopfStructure D;
  D.dim = dim;
  D.conductor = H.conductor;
  D.basis.resize(dim);
  for (int i = 0; i < dim; ++i) D.basis[i] = H.basis[i] + "*";
  D.mult.assign(static_cast<size_t>(dim) * dim, {});
  for (int k = 0; k < dim; ++k)
    for (const auto& [key, c] : H.comult[k]) D.mult[key].emplace_back(k, c);
  D.comult.assign(dim, {});
  for (int key = 0; key < dim * dim; ++key)
    for (const auto& [k, c] : H.mult[key]) D.comult[k].emplace_back(key, c);
  for (int i = 0; i < dim; ++i)
    if (!H.counit[i].is_zero()) D.unit.emplace_back(i, H.counit[i]);
  D.counit.assign(dim, CycScalar(H.conductor));
  for (const auto& [i, c] : H.unit) D.counit[i] = c;
  D.antipode.assign(dim, {});
  for (int j = 0; j < dim; ++j)
    for (const auto& [i, c] : H.antipode[j]) D.antipode[i].emplace_back(j, c);
  D.source = H.source;
  D.is_dual = !H.is_dual;
  return D;
}

SparseVec hopf_multiply(const HopfStructure& H, const SparseVec& a, const SparseVec& b) {
  Acc acc(H.conductor);
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : b) {
      const SparseVec& m = H.mult[static_cast<size_t>(i) * H.dim + j];
      if (m.empty()) continue;
      CycScalar xy = x * y;
      for (const auto& [k, c] : m) acc.add(k, xy * c);
    }
  return acc.sparse();
}

SparseVec hopf_coproduct(const HopfStructure& H, const SparseVec& a) {
  Acc acc(H.conductor);
  for (const auto& [i, x] : a)
    for (const auto& [key, c] : H.comult[i]) acc.add(key, x * c);
  return acc.sparse();
}

CycScalar hopf_counit(const HopfStructure& H, const SparseVec& a) {
  CycScalar s(H.conductor);
  for (const auto& [i, x] : a) s += x * H.counit[i];
  return s;
}

std::vector<SparseVec> solve_antipode(const HopfStructure& H) {
  const int dim = H.dim, N = H.conductor;
  // Unknown s_{i j}: coefficient of b_j in S(b_i), variable i * dim + j.
  // Equation (a, k): sum over Delta(a) = sum c a1 (x) a2 of c S(a1) a2 = eps(a) 1.
  std::map<long long, std::map<int, CycScalar>> rows;
  std::map<long long, CycScalar> rhs;
  for (int a = 0; a < dim; ++a) {
    for (const auto& [key, c] : H.comult[a]) {
      int a1 = key / dim, a2 = key % dim;
      for (int j = 0; j < dim; ++j)
        for (const auto& [k, m] : H.mult[static_cast<size_t>(j) * dim + a2]) {
          auto& row = rows[static_cast<long long>(a) * dim + k];
          auto [it, ins] = row.try_emplace(a1 * dim + j, c * m);
          if (!ins) it->second += c * m;
        }
    }
    if (!H.counit[a].is_zero())
      for (const auto& [k, u] : H.unit) rhs[static_cast<long long>(a) * dim + k] = H.counit[a] * u;
  }
  for (auto& [e, row] : rows)
    for (auto it = row.begin(); it != row.end();)
      it = it->second.is_zero() ? row.erase(it) : std::next(it);
  for (const auto& [e, v] : rhs)
    if (!v.is_zero() && (!rows.count(e) || rows[e].empty()))
      fail(ErrorKind::Invalid, "antipode: convolution inverse does not exist");

  const int nv = dim * dim;
  std::vector<int> parent(nv);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<bool> seen(nv, false);
  for (const auto& [e, row] : rows) {
    if (row.empty()) continue;
    int r0 = find(row.begin()->first);
    for (const auto& [v, c] : row) {
      seen[v] = true;
      parent[find(v)] = r0;
    }
  }
  for (int v = 0; v < nv; ++v)
    if (!seen[v]) fail(ErrorKind::Invalid, "antipode: system is underdetermined");
  std::map<int, std::vector<long long>> comp_eqs;
  std::map<int, std::vector<int>> comp_vars;
  for (const auto& [e, row] : rows)
    if (!row.empty()) comp_eqs[find(row.begin()->first)].push_back(e);
  for (int v = 0; v < nv; ++v) comp_vars[find(v)].push_back(v);

  std::vector<CycScalar> sol(nv, CycScalar(N));
  for (const auto& [root, vars] : comp_vars) {
    const auto& eqs = comp_eqs[root];
    const int nc = static_cast<int>(vars.size());
    std::map<int, int> col;
    for (int i = 0; i < nc; ++i) col[vars[i]] = i;
    std::vector<std::vector<CycScalar>> M;
    for (long long e : eqs) {
      std::vector<CycScalar> r(nc + 1, CycScalar(N));
      for (const auto& [v, c] : rows[e]) r[col[v]] = c;
      if (auto it = rhs.find(e); it != rhs.end()) r[nc] = it->second;
      M.push_back(std::move(r));
    }
    int prow = 0;
    std::vector<int> pivcol;
    for (int c = 0; c < nc && prow < static_cast<int>(M.size()); ++c) {
      int p = prow;
      while (p < static_cast<int>(M.size()) && M[p][c].is_zero()) ++p;
      if (p == static_cast<int>(M.size())) continue;
      std::swap(M[p], M[prow]);
      CycScalar inv = M[prow][c].inverse();
      for (auto& x : M[prow]) x = x * inv;
      for (int r = 0; r < static_cast<int>(M.size()); ++r) {
        if (r == prow || M[r][c].is_zero()) continue;
        CycScalar t = M[r][c];
        for (int k = c; k <= nc; ++k) M[r][k] -= t * M[prow][k];
      }
      pivcol.push_back(c);
      ++prow;
    }
    for (int r = prow; r < static_cast<int>(M.size()); ++r)
      if (!M[r][nc].is_zero())
        fail(ErrorKind::Invalid, "antipode: convolution inverse does not exist");
    if (prow != nc) fail(ErrorKind::Invalid, "antipode: system is underdetermined");
    for (int r = 0; r < prow; ++r) sol[vars[pivcol[r]]] = M[r][nc];
  }
  std::vector<SparseVec> S(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      if (!sol[i * dim + j].is_zero()) S[i].emplace_back(j, sol[i * dim + j]);
  return S;
}

HopfCheck verify_hopf(const HopfStructure& H) {
  const int dim = H.dim, N = H.conductor;
  const long long D = dim;
  HopfCheck out;
  auto failed = [&](const std::string& what) {
    out.ok = false;
    out.failure = what;
    return out;
  };
  if (static_cast<int>(H.mult.size()) != dim * dim ||
      static_cast<int>(H.comult.size()) != dim ||
      static_cast<int>(H.counit.size()) != dim ||
      static_cast<int>(H.antipode.size()) != dim)
    return failed("structure tensors have the wrong shape");

  auto e = [&](int i) { return SparseVec{{i, CycScalar::rational(N, 1)}}; };

  // First failing index per outer loop, merged deterministically.
  auto first_failure = [&](const std::function<std::string(int)>& check) {
    std::vector<std::string> res(dim);
    parallel_for(dim, [&](int i) { res[i] = check(i); });
    for (const auto& r : res)
      if (!r.empty()) return r;
    return std::string();
  };

  std::string f = first_failure([&](int i) -> std::string {
    SparseVec bi = e(i);
    for (int j = 0; j < dim; ++j) {
      SparseVec bij = hopf_multiply(H, bi, e(j));
      for (int k = 0; k < dim; ++k) {
        SparseVec l = hopf_multiply(H, bij, e(k));
        SparseVec r = hopf_multiply(H, bi, hopf_multiply(H, e(j), e(k)));
        if (!same(widen(l), widen(r))) return "associativity at " + witness(H, {i, j, k});
      }
    }
    return {};
  });
  if (!f.empty()) return failed(f);

  f = first_failure([&](int i) -> std::string {
    LongVec bi = widen(e(i));
    if (!same(widen(hopf_multiply(H, H.unit, e(i))), bi) ||
        !same(widen(hopf_multiply(H, e(i), H.unit)), bi))
      return "unit at " + witness(H, {i});
    return {};
  });
  if (!f.empty()) return failed(f);

  f = first_failure([&](int k) -> std::string {
    Acc l(N), r(N);
    for (const auto& [key, c] : H.comult[k]) {
      int i = key / dim, j = key % dim;
      for (const auto& [key2, c2] : H.comult[i])
        l.add((static_cast<long long>(key2 / dim) * D + key2 % dim) * D + j, c * c2);
      for (const auto& [key2, c2] : H.comult[j])
        r.add((static_cast<long long>(i) * D + key2 / dim) * D + key2 % dim, c * c2);
    }
    if (!same(l.take(), r.take())) return "coassociativity at " + witness(H, {k});
    return {};
  });
  if (!f.empty()) return failed(f);

  f = first_failure([&](int k) -> std::string {
    Acc l(N), r(N);
    for (const auto& [key, c] : H.comult[k]) {
      int i = key / dim, j = key % dim;
      if (!H.counit[i].is_zero()) l.add(j, c * H.counit[i]);
      if (!H.counit[j].is_zero()) r.add(i, c * H.counit[j]);
    }
    LongVec bk = widen(e(k));
    if (!same(l.take(), bk) || !same(r.take(), bk)) return "counit at " + witness(H, {k});
    return {};
  });
  if (!f.empty()) return failed(f);

  f = first_failure([&](int i) -> std::string {
    for (int j = 0; j < dim; ++j) {
      const SparseVec& ab = H.mult[static_cast<size_t>(i) * dim + j];
      LongVec lhs = widen(hopf_coproduct(H, ab));
      Acc rhs(N);
      for (const auto& [ki, ci] : H.comult[i])
        for (const auto& [kj, cj] : H.comult[j]) {
          const SparseVec& m1 = H.mult[static_cast<size_t>(ki / dim) * dim + kj / dim];
          if (m1.empty()) continue;
          const SparseVec& m2 = H.mult[static_cast<size_t>(ki % dim) * dim + kj % dim];
          if (m2.empty()) continue;
          CycScalar c = ci * cj;
          for (const auto& [p, x] : m1)
            for (const auto& [q, y] : m2) rhs.add(static_cast<long long>(p) * D + q, c * x * y);
        }
      if (!same(lhs, rhs.take())) return "comultiplication is multiplicative at " + witness(H, {i, j});
      CycScalar eps_ab = hopf_counit(H, ab);
      if (!(eps_ab == H.counit[i] * H.counit[j]))
        return "counit is multiplicative at " + witness(H, {i, j});
    }
    return {};
  });
  if (!f.empty()) return failed(f);

  {
    Acc uu(N);
    for (const auto& [i, x] : H.unit)
      for (const auto& [j, y] : H.unit) uu.add(static_cast<long long>(i) * D + j, x * y);
    if (!same(widen(hopf_coproduct(H, H.unit)), uu.take()))
      return failed("comultiplication of the unit");
    if (!hopf_counit(H, H.unit).is_one()) return failed("counit of the unit");
  }

  f = first_failure([&](int a) -> std::string {
    Acc l(N), r(N);
    for (const auto& [key, c] : H.comult[a]) {
      int a1 = key / dim, a2 = key % dim;
      for (const auto& [k, x] : hopf_multiply(H, H.antipode[a1], e(a2))) l.add(k, c * x);
      for (const auto& [k, x] : hopf_multiply(H, e(a1), H.antipode[a2])) r.add(k, c * x);
    }
    Acc target(N);
    for (const auto& [k, u] : H.unit) target.add(k, H.counit[a] * u);
    LongVec t = target.take();
    if (!same(l.take(), t)) return "antipode (left) at " + witness(H, {a});
    if (!same(r.take(), t)) return "antipode (right) at " + witness(H, {a});
    return {};
  });
  if (!f.empty()) return failed(f);
  return out;
}

GroupLikes grouplikes(const HopfStructure& H) {
  if (!H.source) fail(ErrorKind::Invalid, "grouplikes: structure is not a bicrossed product");
  const MatchedPairData& mp = *H.source;
  const int nF = mp.F.order(), nG = mp.Gamma.order(), N = mp.conductor;
  std::vector<SparseVec> elems;
  if (!H.is_dual) {
    // g = sum_gamma c(gamma) delta_gamma # u0 with u0 fixed by Gamma and
    // c(mu) c(nu) = tau_u0(mu, nu) c(mu nu).
    const long long M = static_cast<long long>(N) * exponent_of(mp.Gamma);
    auto chars = character_exponents(mp.Gamma, static_cast<int>(M));
    for (int u = 0; u < nF; ++u) {
      bool fixed = true;
      for (int g = 0; g < nG && fixed; ++g) fixed = mp.act_left(g, u) == u;
      if (!fixed) continue;
      auto p = solve_twisted_character(mp.Gamma, M, [&](int a, int b) {
        return static_cast<long long>(mp.tau_exp(u, a, b)) * (M / N);
      });
      if (!p) continue;
      for (const auto& chi : chars) {
        SparseVec v;
        for (int g = 0; g < nG; ++g)
          v.emplace_back(g * nF + u, CycScalar::root(static_cast<int>(M), (*p)[g] + chi[g]));
        elems.push_back(std::move(v));
      }
    }
  } else {
    // Algebra maps of the bicrossed product: phi(delta_gamma # f) =
    // [gamma = gamma0] psi(f), gamma0 fixed by F, psi twisted by sigma_gamma0.
    const long long M = static_cast<long long>(N) * exponent_of(mp.F);
    auto chars = character_exponents(mp.F, static_cast<int>(M));
    for (int g0 = 0; g0 < nG; ++g0) {
      bool fixed = true;
      for (int f = 0; f < nF && fixed; ++f) fixed = mp.act_right(g0, f) == g0;
      if (!fixed) continue;
      auto p = solve_twisted_character(mp.F, M, [&](int a, int b) {
        return static_cast<long long>(mp.sigma_exp(g0, a, b)) * (M / N);
      });
      if (!p) continue;
      for (const auto& chi : chars) {
        SparseVec v;
        for (int f = 0; f < nF; ++f)
          v.emplace_back(g0 * nF + f, CycScalar::root(static_cast<int>(M), (*p)[f] + chi[f]));
        elems.push_back(std::move(v));
      }
    }
  }
  const int n = static_cast<int>(elems.size());
  if (n == 0) fail(ErrorKind::Internal, "grouplikes: the unit is missing");
  auto find = [&](const SparseVec& v) {
    LongVec w = widen(v);
    for (int i = 0; i < n; ++i)
      if (same(widen(elems[i]), w)) return i;
    return -1;
  };
  int id = find(H.unit);
  if (id < 0) fail(ErrorKind::Internal, "grouplikes: the unit is missing");
  std::swap(elems[0], elems[id]);
  std::vector<int> table(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int k = find(hopf_multiply(H, elems[i], elems[j]));
      if (k < 0) fail(ErrorKind::Internal, "grouplikes: not closed under multiplication");
      table[static_cast<size_t>(i) * n + j] = k;
    }
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = i == 0 ? "1" : "g" + std::to_string(i);
  GroupLikes out;
  out.group = Group(n, std::move(table), std::move(labels), "grouplikes");
  out.elements = std::move(elems);
  return out;
}

namespace {

using CMat = Eigen::MatrixXcd;

CMat left_mult_matrix(const HopfStructure& H, int a) {
  const int dim = H.dim;
  CMat L = CMat::Zero(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (const auto& [k, c] : H.mult[static_cast<size_t>(a) * dim + i]) L(k, i) += c.to_complex();
  return L;
}

// Orthonormal basis of the center (columns), from the Gram matrix of the
// commutator constraints.
CMat center_basis(const HopfStructure& H) {
  const int dim = H.dim;
  CMat G = CMat::Zero(dim, dim);
  for (int a = 0; a < dim; ++a) {
    CMat B = CMat::Zero(dim, dim);  // (k, i): coefficient of b_k in b_i b_a - b_a b_i
    for (int i = 0; i < dim; ++i) {
      for (const auto& [k, c] : H.mult[static_cast<size_t>(i) * dim + a]) B(k, i) += c.to_complex();
      for (const auto& [k, c] : H.mult[static_cast<size_t>(a) * dim + i]) B(k, i) -= c.to_complex();
    }
    G.noalias() += B.adjoint() * B;
  }
  Eigen::SelfAdjointEigenSolver<CMat> es(G);
  const auto& ev = es.eigenvalues();
  double scale = std::max(1.0, ev.cwiseAbs().maxCoeff());
  std::vector<int> null;
  for (int i = 0; i < dim; ++i)
    if (std::abs(ev(i)) < 1e-8 * scale) null.push_back(i);
  CMat Z(dim, static_cast<int>(null.size()));
  for (size_t t = 0; t < null.size(); ++t) Z.col(static_cast<int>(t)) = es.eigenvectors().col(null[t]);
  return Z;
}

}  // namespace

int center_dimension(const HopfStructure& H) { return static_cast<int>(center_basis(H).cols()); }

bool is_semisimple(const HopfStructure& H) {
  const int dim = H.dim, N = H.conductor;
  std::vector<CycScalar> tr(dim, CycScalar(N));
  for (int c = 0; c < dim; ++c)
    for (int i = 0; i < dim; ++i)
      for (const auto& [k, x] : H.mult[static_cast<size_t>(c) * dim + i])
        if (k == i) tr[c] += x;
  std::vector<std::vector<CycScalar>> T(dim, std::vector<CycScalar>(dim, CycScalar(N)));
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b)
      for (const auto& [k, x] : H.mult[static_cast<size_t>(a) * dim + b]) T[a][b] += x * tr[k];
  int rank = 0;
  for (int c = 0; c < dim && rank < dim; ++c) {
    int p = rank;
    while (p < dim && T[p][c].is_zero()) ++p;
    if (p == dim) continue;
    std::swap(T[p], T[rank]);
    CycScalar inv = T[rank][c].inverse();
    for (int r = rank + 1; r < dim; ++r) {
      if (T[r][c].is_zero()) continue;
      CycScalar t = T[r][c] * inv;
      for (int k = c; k < dim; ++k) T[r][k] -= t * T[rank][k];
    }
    ++rank;
  }
  return rank == dim;
}

std::vector<int> algebra_type(const HopfStructure& H) {
  if (!is_semisimple(H)) fail(ErrorKind::Invalid, "algebra_type: algebra is not semisimple");
  const int dim = H.dim;
  CMat Z = center_basis(H);
  const int zdim = static_cast<int>(Z.cols());
  std::vector<CMat> L(dim);
  for (int a = 0; a < dim; ++a) L[a] = left_mult_matrix(H, a);
  std::mt19937_64 rng(0x5eed);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  for (int attempt = 0; attempt < 8; ++attempt) {
    Eigen::VectorXcd coeff = Eigen::VectorXcd::Zero(zdim);
    for (int t = 0; t < zdim; ++t) coeff(t) = {U(rng), U(rng)};
    Eigen::VectorXcd z = Z * coeff;
    CMat Lz = CMat::Zero(dim, dim);
    for (int a = 0; a < dim; ++a)
      if (std::abs(z(a)) > 0) Lz += z(a) * L[a];
    Eigen::ComplexEigenSolver<CMat> es(Lz, false);
    std::vector<std::complex<double>> ev(es.eigenvalues().data(), es.eigenvalues().data() + dim);
    double scale = 1.0;
    for (const auto& x : ev) scale = std::max(scale, std::abs(x));
    std::vector<int> cluster(dim, -1);
    std::vector<int> sizes;
    for (int i = 0; i < dim; ++i) {
      if (cluster[i] >= 0) continue;
      cluster[i] = static_cast<int>(sizes.size());
      int cnt = 1;
      for (int j = i + 1; j < dim; ++j)
        if (cluster[j] < 0 && std::abs(ev[i] - ev[j]) < 1e-8 * scale) {
          cluster[j] = cluster[i];
          ++cnt;
        }
      sizes.push_back(cnt);
    }
    std::vector<int> blocks;
    int total = 0;
    bool good = static_cast<int>(sizes.size()) == zdim;
    for (int m : sizes) {
      int d = static_cast<int>(std::lround(std::sqrt(static_cast<double>(m))));
      if (d * d != m) good = false;
      blocks.push_back(d);
      total += d * d;
    }
    if (good && total == dim) {
      std::sort(blocks.begin(), blocks.end());
      return blocks;
    }
  }
  fail(ErrorKind::Internal, "algebra_type: eigenvalue clustering did not split the center");
}

std::vector<int> coalgebra_type(const HopfStructure& H) { return algebra_type(dual(H)); }

std::string block_string(const std::vector<int>& blocks) {
  std::map<int, int> count;
  for (int d : blocks) ++count[d];
  std::string s;
  for (const auto& [d, c] : count) {
    if (!s.empty()) s += ' ';
    s += std::to_string(d) + "^" + std::to_string(c);
  }
  return s;
}

std::string hopf_to_json(const HopfStructure& H) {
  using nlohmann::json;
  json j;
  j["dim"] = H.dim;
  j["basis"] = H.basis;
  j["conductor"] = H.conductor;
  json mult = json::array();
  for (int i = 0; i < H.dim; ++i)
    for (int k = 0; k < H.dim; ++k)
      for (const auto& [t, c] : H.mult[static_cast<size_t>(i) * H.dim + k])
        mult.push_back({i, k, t, c.to_string()});
  j["mult"] = mult;
  json comult = json::array();
  for (int k = 0; k < H.dim; ++k)
    for (const auto& [key, c] : H.comult[k])
      comult.push_back({k, key / H.dim, key % H.dim, c.to_string()});
  j["comult"] = comult;
  json unit = json::array();
  for (const auto& [i, c] : H.unit) unit.push_back({i, c.to_string()});
  j["unit"] = unit;
  json counit = json::array();
  for (const auto& c : H.counit) counit.push_back(c.to_string());
  j["counit"] = counit;
  json antipode = json::array();
  for (int i = 0; i < H.dim; ++i)
    for (const auto& [k, c] : H.antipode[i]) antipode.push_back({i, k, c.to_string()});
  j["antipode"] = antipode;
  return j.dump();
}

}  // namespace gth
