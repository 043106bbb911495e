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
#include <map>
#include <memory>
#include <mutex>
#include <unordered_set>

#include "gth/group.hpp"

namespace gth {

namespace {

struct VecHash {
  size_t operator()(const std::vector<int>& v) const {
    uint64_t h = 1469598103934665603ull;
    for (int x : v) h = (h ^ static_cast<uint64_t>(x)) * 1099511628211ull;
    return static_cast<size_t>(h);
  }
};

std::vector<int> class_sizes(const Group& G) {
  std::vector<int> size(G.order(), 0);
  for (const auto& c : conjugacy_classes(G, whole(G)))
    for (int x : c) size[x] = static_cast<int>(c.size());
  return size;
}

// Backtracking search for injective homomorphisms A -> B determined by the
// images of a generating set of A.
class HomSearch {
 public:
  HomSearch(const Group& A, const Group& B, std::vector<int> gens,
            std::vector<std::vector<int>> candidates, bool find_all)
      : A_(A),
        B_(B),
        gens_(std::move(gens)),
        cand_(std::move(candidates)),
        all_(find_all),
        img_(gens_.size(), -1) {}

  std::vector<GroupMap> run() {
    recurse(0);
    return std::move(found_);
  }

 private:
  // Extends the assignment on <g_0..g_k> consistently; false on conflict or
  // loss of injectivity.
  bool extend(size_t k, std::vector<int>& map) const {
    map.assign(A_.order(), -1);
    std::vector<bool> used(B_.order(), false);
    map[0] = 0;
    used[0] = true;
    std::vector<int> queue{0};
    for (size_t q = 0; q < queue.size(); ++q) {
      int x = queue[q];
      for (size_t j = 0; j <= k; ++j) {
        int y = A_.mul(x, gens_[j]);
        int iy = B_.mul(map[x], img_[j]);
        if (map[y] < 0) {
          if (used[iy]) return false;
          used[iy] = true;
          map[y] = iy;
          queue.push_back(y);
        } else if (map[y] != iy) {
          return false;
        }
      }
    }
    return true;
  }

  void recurse(size_t k) {
    if (!all_ && !found_.empty()) return;
    if (k == gens_.size()) {
      std::vector<int> map;
      if (gens_.empty()) {
        map.assign(A_.order(), 0);
      } else if (!extend(k - 1, map)) {
        return;
      }
      for (int v : map)
        if (v < 0) return;
      found_.push_back(GroupMap{map});
      return;
    }
    std::vector<int> scratch;
    for (int c : cand_[k]) {
      img_[k] = c;
      if (extend(k, scratch)) recurse(k + 1);
      if (!all_ && !found_.empty()) return;
    }
    img_[k] = -1;
  }

  const Group& A_;
  const Group& B_;
  std::vector<int> gens_;
  std::vector<std::vector<int>> cand_;
  bool all_;
  std::vector<int> img_;
  std::vector<GroupMap> found_;
};

std::vector<std::vector<int>> candidates_for(const Group& A,
                                             const std::vector<int>& gens,
                                             const Group& B,
                                             const std::vector<int>& csA,
                                             const std::vector<int>& csB) {
  std::vector<std::vector<int>> cand(gens.size());
  for (size_t i = 0; i < gens.size(); ++i)
    for (int y = 0; y < B.order(); ++y)
      if (B.elem_order(y) == A.elem_order(gens[i]) && csB[y] == csA[gens[i]])
        cand[i].push_back(y);
  return cand;
}

std::vector<int> order_profile(const Group& G, const std::vector<int>& cs) {
  std::vector<int> prof;
  for (int g = 0; g < G.order(); ++g)
    prof.push_back(G.elem_order(g) * 1000 + cs[g]);
  std::sort(prof.begin(), prof.end());
  return prof;
}

}  // namespace

bool is_homomorphism(const Group& src, const Group& dst, const GroupMap& f) {
  if (static_cast<int>(f.img.size()) != src.order()) return false;
  for (int v : f.img)
    if (v < 0 || v >= dst.order()) return false;
  for (int a = 0; a < src.order(); ++a)
    for (int b = 0; b < src.order(); ++b)
      if (f(src.mul(a, b)) != dst.mul(f(a), f(b))) return false;
  return true;
}

bool is_bijective(const GroupMap& f, int target_order) {
  if (static_cast<int>(f.img.size()) != target_order) return false;
  std::vector<bool> hit(target_order, false);
  for (int v : f.img) {
    if (v < 0 || v >= target_order || hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

GroupMap compose(const GroupMap& outer, const GroupMap& inner) {
  GroupMap r;
  r.img.resize(inner.img.size());
  for (size_t i = 0; i < inner.img.size(); ++i) r.img[i] = outer(inner(i));
  return r;
}

GroupMap inverse_map(const GroupMap& f) {
  GroupMap r;
  r.img.assign(f.img.size(), -1);
  for (size_t i = 0; i < f.img.size(); ++i) r.img[f.img[i]] = static_cast<int>(i);
  return r;
}

GroupMap identity_map(const Group& G) {
  GroupMap r;
  for (int g = 0; g < G.order(); ++g) r.img.push_back(g);
  return r;
}

GroupMap inner_automorphism(const Group& G, int g) {
  GroupMap r;
  for (int x = 0; x < G.order(); ++x) r.img.push_back(G.conj(g, x));
  return r;
}

std::vector<GroupMap> automorphisms(const Group& G) {
  std::vector<int> gens = min_generating_set(G);
  std::vector<int> cs = class_sizes(G);
  HomSearch search(G, G, gens, candidates_for(G, gens, G, cs, cs), true);
  std::vector<GroupMap> out = search.run();
  std::sort(out.begin(), out.end(),
            [](const GroupMap& a, const GroupMap& b) { return a.img < b.img; });
  return out;
}

std::vector<GroupMap> automorphism_generators(const Group& G) {
  std::vector<GroupMap> all = automorphisms(G);
  std::vector<GroupMap> gens;
  std::unordered_set<std::vector<int>, VecHash> closure;
  std::vector<GroupMap> elems{identity_map(G)};
  closure.insert(elems[0].img);
  for (const auto& a : all) {
    if (closure.count(a.img)) continue;
    gens.push_back(a);
    // Regenerate the closure with the enlarged generator list.
    for (size_t q = 0; q < elems.size(); ++q)
      for (const auto& g : gens) {
        GroupMap c = compose(g, elems[q]);
        if (closure.insert(c.img).second) elems.push_back(c);
      }
    if (elems.size() == all.size()) break;
  }
  return gens;
}

std::optional<GroupMap> isomorphism(const Group& G, const Group& H) {
  if (G.order() != H.order()) return std::nullopt;
  std::vector<int> csG = class_sizes(G), csH = class_sizes(H);
  if (order_profile(G, csG) != order_profile(H, csH)) return std::nullopt;
  std::vector<int> gens = min_generating_set(G);
  HomSearch search(G, H, gens, candidates_for(G, gens, H, csG, csH), false);
  auto found = search.run();
  if (found.empty()) return std::nullopt;
  return found.front();
}

bool isomorphic(const Group& G, const Group& H) {
  return isomorphism(G, H).has_value();
}

AbelianShape abelian_shape(const Group& G, const Subgroup& a) {
  if (!is_abelian(G, a)) fail(ErrorKind::Invalid, "abelian_shape: non-abelian");
  // Per prime: basis elements with their orders p^e, non-increasing.
  std::vector<std::vector<std::pair<int, int>>> per_prime;
  for (auto [p, e] : factorize(a.order())) {
    std::vector<int> P;
    for (int x : a.members) {
      int o = G.elem_order(x);
      while (o % p == 0) o /= p;
      if (o == 1) P.push_back(x);
    }
    // coords: current span, each element with its basis coordinates.
    std::vector<std::pair<int, int>> basis;  // (element, order)
    std::map<int, std::vector<int>> coords{{0, {}}};
    while (coords.size() < P.size()) {
      int best = -1, best_k = -1, best_pk = 1;
      for (int y : P) {
        int k = 0, pk = 1, z = y;
        while (!coords.count(z)) {
          z = G.pow(z, p);
          ++k;
          pk *= p;
        }
        if (k > best_k) {
          best = y;
          best_k = k;
          best_pk = pk;
        }
      }
      int h = G.pow(best, best_pk);
      std::vector<int> c = coords.at(h);
      int y = best;
      for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] % best_pk)
          fail(ErrorKind::Internal, "abelian_shape: basis adjustment failed");
        y = G.mul(y, G.pow(basis[i].first, -(c[i] / best_pk)));
      }
      std::map<int, std::vector<int>> next;
      for (const auto& [elem, cv] : coords) {
        int cur = elem;
        for (int t = 0; t < best_pk; ++t) {
          std::vector<int> nc = cv;
          nc.push_back(t);
          next[cur] = nc;
          cur = G.mul(cur, y);
        }
      }
      basis.emplace_back(y, best_pk);
      coords = std::move(next);
    }
    per_prime.push_back(basis);
  }
  size_t rank = 0;
  for (const auto& b : per_prime) rank = std::max(rank, b.size());
  AbelianShape shape;
  for (size_t j = 0; j < rank; ++j) {
    int d = 1, g = 0;
    for (const auto& b : per_prime)
      if (j < b.size()) {
        d *= b[j].second;
        g = G.mul(g, b[j].first);
      }
    shape.factors.push_back(d);
    shape.generators.push_back(g);
  }
  std::reverse(shape.factors.begin(), shape.factors.end());
  std::reverse(shape.generators.begin(), shape.generators.end());
  return shape;
}

Group character_group(const AbelianShape& shape) {
  int n = 1;
  for (int d : shape.factors) n *= d;
  const int k = static_cast<int>(shape.factors.size());
  auto decode = [&](int idx) {
    std::vector<int> c(k);
    for (int i = k - 1; i >= 0; --i) {
      c[i] = idx % shape.factors[i];
      idx /= shape.factors[i];
    }
    return c;
  };
  auto encode = [&](const std::vector<int>& c) {
    int idx = 0;
    for (int i = 0; i < k; ++i) idx = idx * shape.factors[i] + c[i];
    return idx;
  };
  std::vector<int> t(n * n);
  std::vector<std::string> labels(n);
  for (int a = 0; a < n; ++a) {
    auto ca = decode(a);
    std::string lab = "chi(";
    for (int i = 0; i < k; ++i) lab += (i ? "," : "") + std::to_string(ca[i]);
    labels[a] = lab + ")";
    for (int b = 0; b < n; ++b) {
      auto cb = decode(b);
      for (int i = 0; i < k; ++i) cb[i] = (ca[i] + cb[i]) % shape.factors[i];
      t[a * n + b] = encode(cb);
    }
  }
  std::string prov = "dual of ";
  for (int i = 0; i < k; ++i)
    prov += (i ? " x C " : "C ") + std::to_string(shape.factors[i]);
  if (k == 0) prov += "C 1";
  return Group::trusted(n, std::move(t), std::move(labels), prov);
}

std::vector<std::vector<int>> shape_coordinates(const Group& G,
                                                const Subgroup& a,
                                                const AbelianShape& shape) {
  const int k = static_cast<int>(shape.factors.size());
  std::vector<std::vector<int>> out(a.order());
  std::vector<int> c(k, 0);
  for (;;) {
    int e = 0;
    for (int i = 0; i < k; ++i) e = G.mul(e, G.pow(shape.generators[i], c[i]));
    out[a.position(e)] = c;
    int i = k - 1;
    while (i >= 0 && ++c[i] == shape.factors[i]) c[i--] = 0;
    if (i < 0) break;
  }
  return out;
}

int character_pairing(const AbelianShape& shape, const std::vector<int>& c,
                      const std::vector<int>& x, int lcm_out) {
  long long s = 0;
  for (size_t i = 0; i < shape.factors.size(); ++i)
    s += static_cast<long long>(c[i]) * x[i] * (lcm_out / shape.factors[i]);
  return static_cast<int>(mod_pos(s, lcm_out));
}

std::vector<std::string> catalog_candidates(int order) {
  std::vector<std::string> out;
  long long f = 1;
  for (int m = 1; m <= 5; ++m) {
    f *= m;
    if (m >= 3 && f == order) out.push_back("S " + std::to_string(m));
    if (m >= 4 && f / 2 == order) out.push_back("A " + std::to_string(m));
  }
  if (order % 2 == 0 && order >= 6) out.push_back("D " + std::to_string(order / 2));
  // Products of a non-abelian candidate with a cyclic or non-abelian factor.
  for (int m = 2; m <= order / 6; ++m) {
    if (order % m) continue;
    for (const auto& x : catalog_candidates(order / m)) {
      if (x.find(" x ") != std::string::npos) continue;
      out.push_back(x + " x C " + std::to_string(m));
    }
  }
  for (int m = 6; m * m <= order; ++m) {
    if (order % m) continue;
    for (const auto& x : catalog_candidates(m))
      for (const auto& y : catalog_candidates(order / m)) {
        if (x.find(" x ") != std::string::npos ||
            y.find(" x ") != std::string::npos)
          continue;
        out.push_back(x + " x " + y);
      }
  }
  for (int a = 3; a <= order / 2; ++a) {
    if (order % a) continue;
    int c = order / a;
    for (int b = 2; b < a; ++b) {
      if (gcd64(a, b) != 1) continue;
      long long bc = 1;
      for (int i = 0; i < c; ++i) bc = bc * b % a;
      if (bc != 1) continue;
      out.push_back("C " + std::to_string(a) + " : " + std::to_string(b) +
                    " : C " + std::to_string(c));
    }
  }
  return out;
}

namespace {
std::string display_name(const std::string& spec) {
  std::string out;
  for (size_t i = 0; i < spec.size(); ++i) {
    if (spec[i] == ' ') {
      bool keep = (i + 2 < spec.size() && spec[i + 1] == 'x' &&
                   spec[i + 2] == ' ') ||
                  (i >= 1 && spec[i - 1] == 'x' && i >= 2 && spec[i - 2] == ' ');
      if (keep) out += ' ';
      continue;
    }
    out += spec[i];
  }
  return out;
}

const Group& cached_group(const std::string& spec) {
  static std::mutex mu;
  static std::map<std::string, std::unique_ptr<Group>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[spec];
  if (!slot) slot = std::make_unique<Group>(construct(spec));
  return *slot;
}
}  // namespace

std::string identify(const Group& G) {
  Subgroup all = whole(G);
  if (is_abelian(G, all)) {
    AbelianShape s = abelian_shape(G, all);
    if (s.factors.empty()) return "C1";
    std::string out;
    for (size_t i = 0; i < s.factors.size(); ++i)
      out += (i ? " x C" : "C") + std::to_string(s.factors[i]);
    return out;
  }
  for (const auto& spec : catalog_candidates(G.order()))
    if (isomorphic(G, cached_group(spec))) return display_name(spec);
  return "order-" + std::to_string(G.order()) + ", unidentified";
}

}  // namespace gth
