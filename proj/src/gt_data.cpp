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

#include "gth/gt_data.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <unordered_map>

#include "zmod.hpp"

namespace gth {

struct GTContext::Cache {
  std::vector<std::unique_ptr<CohomologyGroup>> h2;
  std::unique_ptr<std::once_flag[]> h2_once;
  std::vector<std::vector<bool>> nondeg;
  std::unique_ptr<std::once_flag[]> nondeg_once;
  std::once_flag aut_once;
  std::vector<GroupMap> auts, aut_gens;
  std::unordered_map<ElemSet, int, ElemSetHash> index;
  std::mutex mu;
  std::map<std::pair<int, int>, std::vector<std::vector<int>>> restriction;
  std::map<std::pair<int, std::vector<int>>, std::pair<int, std::vector<std::vector<int>>>>
      transport;
};

namespace {

int class_order(const CohomologyGroup& h, const std::vector<int>& v) {
  long long o = 1;
  for (size_t i = 0; i < v.size(); ++i)
    o = lcm64(o, h.factors()[i] / gcd64(v[i], h.factors()[i]));
  return static_cast<int>(o);
}

std::vector<int> combine(const CohomologyGroup& target,
                         const std::vector<std::vector<int>>& images,
                         const std::vector<int>& v) {
  std::vector<int> out(target.factors().size(), 0);
  for (size_t k = 0; k < v.size(); ++k)
    for (size_t j = 0; j < out.size(); ++j)
      out[j] = static_cast<int>((out[j] + static_cast<long long>(v[k]) * images[k][j]) %
                                target.factors()[j]);
  return out;
}

}  // namespace

Cocycle2 restrict_between(const Cocycle2& c, const Subgroup& outer, const Subgroup& inner) {
  const int k = inner.order();
  std::vector<int> pos(k);
  for (int i = 0; i < k; ++i) {
    pos[i] = outer.position(inner.members[i]);
    if (pos[i] < 0) fail(ErrorKind::Invalid, "restrict_between: not a subgroup");
  }
  Cocycle2 r = Cocycle2::trivial(k, c.modulus);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) r.at(i, j) = c(pos[i], pos[j]);
  return r;
}

GTContext::GTContext(const Group& G)
    : G_(G), modulus_(G.order()), subs_(all_subgroups(G)), cache_(std::make_shared<Cache>()) {
  const size_t n = subs_.size();
  cache_->h2.resize(n);
  cache_->h2_once = std::make_unique<std::once_flag[]>(n);
  cache_->nondeg.resize(n);
  cache_->nondeg_once = std::make_unique<std::once_flag[]>(n);
  for (size_t i = 0; i < n; ++i) cache_->index[subs_[i].mask] = static_cast<int>(i);
}

int GTContext::index_of(const Subgroup& s) const {
  auto it = cache_->index.find(s.mask);
  if (it == cache_->index.end()) fail(ErrorKind::Invalid, "unknown subgroup");
  return it->second;
}

const std::vector<GroupMap>& GTContext::automorphisms() const {
  std::call_once(cache_->aut_once, [&] {
    cache_->auts = gth::automorphisms(G_);
    cache_->aut_gens = gth::automorphism_generators(G_);
  });
  return cache_->auts;
}

const std::vector<GroupMap>& GTContext::automorphism_generators() const {
  automorphisms();
  return cache_->aut_gens;
}

const CohomologyGroup& GTContext::h2(int sub) const {
  std::call_once(cache_->h2_once[sub], [&] {
    cache_->h2[sub] =
        std::make_unique<CohomologyGroup>(subgroup_group(G_, subs_[sub]), modulus_);
  });
  return *cache_->h2[sub];
}

Cocycle2 GTContext::cocycle_on(int sub, const std::vector<int>& v) const {
  return h2(sub).representative(v);
}

std::vector<int> GTContext::restrict_class(int from, const std::vector<int>& v, int to) const {
  const CohomologyGroup& src = h2(from);
  const CohomologyGroup& dst = h2(to);
  std::vector<std::vector<int>> images;
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->restriction.find({from, to});
    if (it != cache_->restriction.end()) images = it->second;
  }
  if (images.size() != src.basis().size()) {
    images.clear();
    for (const auto& b : src.basis())
      images.push_back(dst.classify(restrict_between(b, subs_[from], subs_[to])));
    std::lock_guard<std::mutex> lock(cache_->mu);
    cache_->restriction[{from, to}] = images;
  }
  return combine(dst, images, v);
}

std::vector<int> GTContext::transport_class(int from, const std::vector<int>& v,
                                            const GroupMap& theta, int* to) const {
  std::pair<int, std::vector<std::vector<int>>> entry{-1, {}};
  auto key = std::make_pair(from, theta.img);
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->transport.find(key);
    if (it != cache_->transport.end()) entry = it->second;
  }
  if (entry.first < 0) {
    const Subgroup& F = subs_[from];
    int j = index_of(image(F, theta, G_));
    const Subgroup& T = subs_[j];
    GroupMap local;
    for (int x : F.members) local.img.push_back(T.position(theta(x)));
    entry.first = j;
    for (const auto& b : h2(from).basis())
      entry.second.push_back(h2(j).classify(pushforward(b, local)));
    std::lock_guard<std::mutex> lock(cache_->mu);
    cache_->transport[key] = entry;
  }
  if (to) *to = entry.first;
  return combine(h2(entry.first), entry.second, v);
}

std::vector<int> GTContext::conjugate_class(int from, const std::vector<int>& v, int g,
                                            int* to) const {
  return transport_class(from, v, inner_automorphism(G_, g), to);
}

bool GTContext::class_invariant_under(int sub, const std::vector<int>& v, int g) const {
  int to = -1;
  std::vector<int> w = conjugate_class(sub, v, g, &to);
  return to == sub && w == v;
}

const std::vector<bool>& GTContext::nondegenerate_classes(int sub) const {
  std::call_once(cache_->nondeg_once[sub], [&] {
    const CohomologyGroup& h = h2(sub);
    Group sg = subgroup_group(G_, subs_[sub]);
    std::vector<bool> nd(h.size());
    for (long long i = 0; i < h.size(); ++i)
      nd[i] = is_nondegenerate(sg, h.representative(h.vector_at(i)));
    cache_->nondeg[sub] = std::move(nd);
  });
  return cache_->nondeg[sub];
}

bool GTContext::is_factorization(int F, int Gamma) const {
  return product_size(subs_[F], subs_[Gamma]) == G_.order();
}

std::vector<std::pair<int, int>> GTContext::factorizations() const {
  std::vector<std::pair<int, int>> out;
  const int n = static_cast<int>(subs_.size());
  for (int f = 0; f < n; ++f)
    for (int g = 0; g < n; ++g)
      if (G_.order() % subs_[f].order() == 0 && is_factorization(f, g)) out.emplace_back(f, g);
  return out;
}

bool GTContext::is_valid(const GTDatum& d) const {
  if (!is_factorization(d.F, d.Gamma)) return false;
  if (d.alpha.size() != h2(d.F).factors().size() || d.beta.size() != h2(d.Gamma).factors().size())
    return false;
  int D = index_of(intersect(subs_[d.F], subs_[d.Gamma]));
  std::vector<int> rho = h2(D).ratio(restrict_class(d.F, d.alpha, D),
                                     restrict_class(d.Gamma, d.beta, D));
  return nondegenerate_classes(D)[h2(D).index_of(rho)];
}

std::vector<GTDatum> GTContext::enumerate_data() const {
  auto pairs = factorizations();
  std::vector<char> needed(subs_.size(), 0);
  for (auto [f, g] : pairs) {
    needed[f] = needed[g] = 1;
    needed[index_of(intersect(subs_[f], subs_[g]))] = 1;
  }
  std::vector<int> todo;
  for (size_t i = 0; i < needed.size(); ++i)
    if (needed[i]) todo.push_back(static_cast<int>(i));
  // Largest groups first for better load balance.
  std::sort(todo.begin(), todo.end(), [&](int a, int b) { return a > b; });
  parallel_for(static_cast<int>(todo.size()), [&](int i) {
    h2(todo[i]);
    nondegenerate_classes(todo[i]);
  });

  std::vector<GTDatum> out;
  for (auto [f, g] : pairs) {
    int D = index_of(intersect(subs_[f], subs_[g]));
    const auto& nd = nondegenerate_classes(D);
    const CohomologyGroup &hf = h2(f), &hg = h2(g), &hd = h2(D);
    for (long long a = 0; a < hf.size(); ++a) {
      auto alpha = hf.vector_at(a);
      auto ra = restrict_class(f, alpha, D);
      for (long long b = 0; b < hg.size(); ++b) {
        auto beta = hg.vector_at(b);
        auto rho = hd.ratio(ra, restrict_class(g, beta, D));
        if (nd[hd.index_of(rho)]) out.push_back(GTDatum{f, g, alpha, beta});
      }
    }
  }
  return out;
}

GTDatum GTContext::act(const GTDatum& d, const GroupMap& theta,
                       const std::vector<int>& gamma) const {
  const int W = whole_index();
  GTDatum r;
  auto a = h2(d.F).add(d.alpha, restrict_class(W, gamma, d.F));
  auto b = h2(d.Gamma).add(d.beta, restrict_class(W, gamma, d.Gamma));
  r.alpha = transport_class(d.F, a, theta, &r.F);
  r.beta = transport_class(d.Gamma, b, theta, &r.Gamma);
  return r;
}

GTDatum GTContext::dual(const GTDatum& d) const {
  return GTDatum{d.Gamma, d.F, d.beta, d.alpha};
}

Triviality GTContext::triviality(const GTDatum& d) const {
  auto side = [&](int sub, const std::vector<int>& v) {
    const Subgroup& s = subs_[sub];
    if (!is_normal(G_, s) || !is_abelian(G_, s)) return false;
    for (int g : min_generating_set(G_))
      if (!class_invariant_under(sub, v, g)) return false;
    return true;
  };
  return Triviality{side(d.F, d.alpha), side(d.Gamma, d.beta)};
}

bool GTContext::is_twist(const GTDatum& d) const { return d.Gamma == whole_index(); }

bool GTContext::is_abelian_extension(const GTDatum& d) const {
  return intersect(subs_[d.F], subs_[d.Gamma]).order() == 1;
}

GTDatum GTContext::reduce_by_global_class(const GTDatum& d) const {
  const CohomologyGroup& hf = h2(d.F);
  if (hf.is_trivial(d.alpha)) return d;
  const CohomologyGroup& hg = h2_global();
  const int W = whole_index();
  auto target = hf.negate(d.alpha);
  for (long long i = 0; i < hg.size(); ++i) {
    auto gamma = hg.vector_at(i);
    if (restrict_class(W, gamma, d.F) != target) continue;
    GTDatum r = d;
    r.alpha = std::vector<int>(d.alpha.size(), 0);
    r.beta = h2(d.Gamma).add(d.beta, restrict_class(W, gamma, d.Gamma));
    return r;
  }
  return d;
}

long long GTContext::grouplike_order(const GTDatum& d) const {
  const Subgroup& F = subs_[d.F];
  long long fhat = F.order() / commutator_subgroup(G_, F).order();
  int stable = 0;
  for (int g : normalizer(G_, F).members) stable += class_invariant_under(d.F, d.alpha, g);
  return fhat * (stable / F.order());
}

// G(H) as pairs (g, psi), g in N_G(F) stabilizing [alpha], psi: F -> Z/M with
// alpha^g - alpha = d psi, product (g, psi)(h, phi) = (gh, psi^h + phi), modulo
// the image of f -> (f, -lambda_f) where u_f u_x u_f^-1 = lambda_f(x) u_{fxf^-1}.
std::optional<Group> GTContext::grouplike_group(const GTDatum& d) const {
  const Subgroup& F = subs_[d.F];
  const int k = F.order();
  Cocycle2 alpha = cocycle_on(d.F, d.alpha);
  long long expF = 1;
  for (int x : F.members) expF = lcm64(expF, G_.elem_order(x));
  const long long M = modulus_ * expF, sm = M / modulus_;
  Group Fg = subgroup_group(G_, F);
  std::vector<int> Fgens = min_generating_set(Fg);

  // Characters of F with values in Z/M.
  Quotient ab = quotient(Fg, commutator_subgroup(Fg, whole(Fg)));
  AbelianShape shape = abelian_shape(ab.group, whole(ab.group));
  auto coords = shape_coordinates(ab.group, whole(ab.group), shape);
  std::vector<std::vector<long long>> chars;
  {
    std::vector<int> c(shape.factors.size(), 0);
    for (;;) {
      std::vector<long long> chi(k);
      for (int x = 0; x < k; ++x) {
        long long s = 0;
        const auto& xc = coords[ab.projection[x]];
        for (size_t i = 0; i < c.size(); ++i) s += c[i] * xc[i] * (M / shape.factors[i]);
        chi[x] = mod_pos(s, M);
      }
      chars.push_back(std::move(chi));
      int i = static_cast<int>(c.size()) - 1;
      while (i >= 0 && ++c[i] == shape.factors[i]) c[i--] = 0;
      if (i < 0) break;
    }
  }

  auto conj_pos = [&](int g, int x) { return F.position(G_.conj(g, F.members[x])); };
  Subgroup N = normalizer(G_, F);
  std::vector<int> coset_rep(G_.order(), -1), reps;
  for (int g : N.members) {
    if (coset_rep[g] >= 0) continue;
    if (!class_invariant_under(d.F, d.alpha, g)) continue;
    for (int f : F.members) coset_rep[G_.mul(g, f)] = g;
    reps.push_back(g);
  }
  // Particular solutions psi_g.
  std::map<int, std::vector<long long>> particular;
  for (int g : reps) {
    std::vector<std::vector<long long>> A;
    std::vector<long long> b;
    for (int x = 0; x < k; ++x)
      for (int s : Fgens) {
        std::vector<long long> row(k, 0);
        int xs = Fg.mul(x, s);
        row[x] += 1;
        row[s] += 1;
        row[xs] -= 1;
        A.push_back(row);
        long long rhs = alpha(conj_pos(g, x), conj_pos(g, s)) - alpha(x, s);
        b.push_back(mod_pos(rhs * sm, M));
      }
    std::vector<long long> row(k, 0);
    row[0] = 1;
    A.push_back(row);
    b.push_back(0);
    auto sol = solve_mod(A, b, k, M);
    if (!sol) fail(ErrorKind::Internal, "grouplike_group: no cochain for a stable element");
    particular[g] = *sol;
  }
  auto lambda = [&](int f) {  // f a position in F
    int fi = Fg.inv(f);
    std::vector<long long> l(k);
    for (int x = 0; x < k; ++x)
      l[x] = mod_pos((alpha(f, x) + alpha(Fg.mul(f, x), fi) - alpha(f, fi)) * sm, M);
    return l;
  };

  using Elem = std::pair<int, std::vector<long long>>;
  std::vector<Elem> elems;
  std::map<Elem, int> index;
  for (int g : reps)
    for (const auto& chi : chars) {
      std::vector<long long> psi(k);
      for (int x = 0; x < k; ++x) psi[x] = (particular[g][x] + chi[x]) % M;
      index[{g, psi}] = static_cast<int>(elems.size());
      elems.push_back({g, std::move(psi)});
    }
  auto canonical_form = [&](int g, std::vector<long long> psi) -> Elem {
    int g0 = coset_rep[g];
    int f = F.position(G_.mul(G_.inv(g0), g));
    int finv = Fg.inv(f);
    // (g, psi)(f^-1, -lambda_{f^-1})
    auto l = lambda(finv);
    std::vector<long long> out(k);
    for (int x = 0; x < k; ++x) {
      int fx = Fg.mul(Fg.mul(finv, x), f);
      out[x] = mod_pos(psi[fx] - l[x], M);
    }
    return {g0, out};
  };
  const int n = static_cast<int>(elems.size());
  if (n > kMaxOrder) return std::nullopt;
  std::vector<int> table(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const auto& [g, psi] = elems[a];
      const auto& [h, phi] = elems[b];
      std::vector<long long> prod(k);
      for (int x = 0; x < k; ++x) prod[x] = (psi[conj_pos(h, x)] + phi[x]) % M;
      auto it = index.find(canonical_form(G_.mul(g, h), std::move(prod)));
      if (it == index.end()) fail(ErrorKind::Internal, "grouplike_group: product not closed");
      table[static_cast<size_t>(a) * n + b] = it->second;
    }
  // Move the identity to index 0.
  int e = -1;
  for (int a = 0; a < n && e < 0; ++a) {
    bool left = true;
    for (int b = 0; b < n && left; ++b) left = table[static_cast<size_t>(a) * n + b] == b;
    if (left) e = a;
  }
  if (e < 0) fail(ErrorKind::Internal, "grouplike_group: no identity");
  std::vector<int> perm(n);
  for (int a = 0; a < n; ++a) perm[a] = a;
  std::swap(perm[0], perm[e]);
  std::vector<int> t2(table.size());
  std::vector<std::string> labels(n);
  for (int a = 0; a < n; ++a) {
    labels[perm[a]] = "[" + G_.label(elems[a].first) + "]." + std::to_string(a);
    for (int b = 0; b < n; ++b)
      t2[static_cast<size_t>(perm[a]) * n + perm[b]] = perm[table[static_cast<size_t>(a) * n + b]];
  }
  return Group(n, std::move(t2), std::move(labels), "G(H)");
}

int GTContext::module_tensor_rank(const GTDatum& d) const {
  const Subgroup &F = subs_[d.F], &Gm = subs_[d.Gamma];
  Cocycle2 a = cocycle_on(d.F, d.alpha), b = cocycle_on(d.Gamma, d.beta);
  int rank = 0;
  for (const auto& dc : double_cosets(G_, F, Gm)) {
    const Subgroup& S = dc.stabilizer;
    int g = dc.representative, gi = G_.inv(g);
    Cocycle2 c = Cocycle2::trivial(S.order(), modulus_);
    for (int i = 0; i < S.order(); ++i)
      for (int j = 0; j < S.order(); ++j) {
        int x = S.members[i], y = S.members[j];
        int bx = Gm.position(G_.conj(gi, x)), by = Gm.position(G_.conj(gi, y));
        c.at(i, j) = static_cast<int>(
            mod_pos(a(F.position(x), F.position(y)) - b(bx, by), modulus_));
      }
    rank += regular_class_count(subgroup_group(G_, S), c);
  }
  return rank;
}

namespace {

struct DatumKey {
  int F, Gamma;
  long long a, b;
  auto operator<=>(const DatumKey&) const = default;
};

}  // namespace

GTDatum GTContext::canonical(const GTDatum& d) const {
  auto key = [&](const GTDatum& x) {
    return DatumKey{x.F, x.Gamma, h2(x.F).index_of(x.alpha), h2(x.Gamma).index_of(x.beta)};
  };
  const auto& gens = automorphism_generators();
  const CohomologyGroup& hg = h2_global();
  std::set<DatumKey> seen{key(d)};
  std::deque<GTDatum> queue{d};
  GTDatum best = d;
  std::vector<int> zero(hg.factors().size(), 0);
  GroupMap id = identity_map(G_);
  while (!queue.empty()) {
    GTDatum cur = queue.front();
    queue.pop_front();
    if (key(cur) < key(best)) best = cur;
    std::vector<GTDatum> next;
    for (const auto& th : gens) next.push_back(act(cur, th, zero));
    for (size_t i = 0; i < hg.basis().size(); ++i) {
      std::vector<int> e(zero);
      e[i] = 1;
      next.push_back(act(cur, id, e));
    }
    for (auto& x : next)
      if (seen.insert(key(x)).second) queue.push_back(std::move(x));
  }
  return best;
}

Classification GTContext::classify(bool all_types) const {
  std::vector<GTDatum> data = enumerate_data();
  std::map<DatumKey, int> id;
  auto key = [&](const GTDatum& x) {
    return DatumKey{x.F, x.Gamma, h2(x.F).index_of(x.alpha), h2(x.Gamma).index_of(x.beta)};
  };
  for (size_t i = 0; i < data.size(); ++i) id[key(data[i])] = static_cast<int>(i);

  const auto& gens = automorphism_generators();
  const CohomologyGroup& hg = h2_global();
  std::vector<int> zero(hg.factors().size(), 0);
  GroupMap ident = identity_map(G_);
  std::vector<int> orbit_of(data.size(), -1);
  Classification out;
  for (size_t i = 0; i < data.size(); ++i) {
    if (orbit_of[i] >= 0) continue;
    const int cls = static_cast<int>(out.classes.size());
    std::vector<int> queue{static_cast<int>(i)};
    orbit_of[i] = cls;
    for (size_t q = 0; q < queue.size(); ++q) {
      const GTDatum& cur = data[queue[q]];
      std::vector<GTDatum> next;
      for (const auto& th : gens) next.push_back(act(cur, th, zero));
      for (size_t b = 0; b < hg.basis().size(); ++b) {
        std::vector<int> e(zero);
        e[b] = 1;
        next.push_back(act(cur, ident, e));
      }
      for (const auto& x : next) {
        auto it = id.find(key(x));
        if (it == id.end()) fail(ErrorKind::Internal, "action left the datum set");
        if (orbit_of[it->second] < 0) {
          orbit_of[it->second] = cls;
          queue.push_back(it->second);
        }
      }
    }
    DatumClass c;
    c.rep = data[i];
    c.orbit_size = static_cast<int>(queue.size());
    out.classes.push_back(std::move(c));
  }

  for (auto& c : out.classes) {
    const GTDatum& d = c.rep;
    c.F_order = subs_[d.F].order();
    c.Gamma_order = subs_[d.Gamma].order();
    c.intersection_order = intersect(subs_[d.F], subs_[d.Gamma]).order();
    c.alpha_order = class_order(h2(d.F), d.alpha);
    c.beta_order = class_order(h2(d.Gamma), d.beta);
    c.triv = triviality(d);
    c.twist = is_twist(d);
    c.abelian_extension = is_abelian_extension(d);
    c.dual_of = orbit_of[id.at(key(dual(d)))];
  }
  parallel_for(static_cast<int>(out.classes.size()), [&](int i) {
    DatumClass& c = out.classes[i];
    c.gh_order = grouplike_order(c.rep);
    if (all_types || !c.triv.trivial()) {
      auto gh = grouplike_group(c.rep);
      if (gh) c.gh_type = identify(*gh);
    }
  });

  // Raw cases: unordered pairs up to automorphisms, both factors non-trivial.
  const auto& auts = automorphisms();
  std::vector<std::vector<int>> sub_image(auts.size(), std::vector<int>(subs_.size()));
  for (size_t t = 0; t < auts.size(); ++t)
    for (size_t s = 0; s < subs_.size(); ++s)
      sub_image[t][s] = index_of(image(subs_[s], auts[t], G_));
  std::map<std::pair<int, int>, RawCase> raw;
  for (size_t i = 0; i < data.size(); ++i) {
    const GTDatum& d = data[i];
    if (d.F == trivial_index() || d.Gamma == trivial_index()) continue;
    std::pair<int, int> best{d.F, d.Gamma};
    for (size_t t = 0; t < auts.size(); ++t) {
      int a = sub_image[t][d.F], b = sub_image[t][d.Gamma];
      best = std::min({best, std::make_pair(a, b), std::make_pair(b, a)});
    }
    RawCase& r = raw[best];
    r.F = best.first;
    r.Gamma = best.second;
    r.intersection_order = intersect(subs_[d.F], subs_[d.Gamma]).order();
    if (!out.classes[orbit_of[i]].triv.trivial()) r.has_nontrivial = true;
  }
  for (auto& [k, r] : raw) out.raw_cases.push_back(r);
  return out;
}

}  // namespace gth
