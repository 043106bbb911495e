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

#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "gth/group.hpp"

namespace gth {

// alpha(g, h) = zeta_m ^ table[g * n + h].
struct Cocycle2 {
  int modulus = 1;
  int n = 0;
  std::vector<int> table;

  int operator()(int g, int h) const { return table[g * n + h]; }
  int& at(int g, int h) { return table[g * n + h]; }
  bool operator==(const Cocycle2& o) const = default;
  static Cocycle2 trivial(int n, int modulus);
};

bool satisfies_cocycle(const Group& G, const Cocycle2& c);
bool is_normalized(const Cocycle2& c);
// du(g, h) = u(g) + u(h) - u(gh).
Cocycle2 coboundary(const Group& G, const std::vector<int>& u, int modulus);
// Re-expresses c with values in Z/modulus; modulus must be a multiple of c's.
Cocycle2 lift_modulus(const Cocycle2& c, int modulus);
Cocycle2 product(const Cocycle2& a, const Cocycle2& b);
Cocycle2 power(const Cocycle2& a, long long k);
// (f^* c)(a, b) = c(f a, f b).
Cocycle2 pullback(const Cocycle2& c, const GroupMap& f);
// theta bijective: (theta_* c)(theta a, theta b) = c(a, b).
Cocycle2 pushforward(const Cocycle2& c, const GroupMap& theta);
// Restriction to F, indexed like subgroup_group(G, F).
Cocycle2 restrict_to(const Cocycle2& c, const Subgroup& F);
// The dihedral cocycle f(r^i s^j, r^k s^l) = k j mod n on D_n (n even).
Cocycle2 f_chi(int n);

// Number of c-regular conjugacy classes (simple components of k_c G).
int regular_class_count(const Group& G, const Cocycle2& c);
bool is_nondegenerate(const Group& G, const Cocycle2& c);
// Radical test of the alternating form c(x,y) c(y,x)^-1; G abelian.
bool alternating_form_nondegenerate(const Group& G, const Cocycle2& c);

// H^2(G, k^x) with representatives valued in mu_m.  Classes are vectors of
// coefficients over cyclic components of prime-power order.
class CohomologyGroup {
 public:
  CohomologyGroup(const Group& G, int modulus);

  const Group& group() const { return group_; }
  int modulus() const { return modulus_; }
  // Prime-power orders of the cyclic components, primes ascending.
  const std::vector<int>& factors() const { return factors_; }
  std::vector<int> invariant_factors() const;
  long long size() const;

  std::vector<int> classify(const Cocycle2& c) const;
  Cocycle2 representative(const std::vector<int>& v) const;
  const std::vector<Cocycle2>& basis() const { return basis_; }
  // Cocycles spanning the Bockstein image of Hom(G, k^x).
  const std::vector<Cocycle2>& bockstein_image() const { return carries_; }

  std::vector<int> add(const std::vector<int>& a, const std::vector<int>& b) const;
  std::vector<int> negate(const std::vector<int>& a) const;
  std::vector<int> ratio(const std::vector<int>& a, const std::vector<int>& b) const;
  bool is_trivial(const std::vector<int>& v) const;
  // Mixed-radix enumeration of all classes.
  long long index_of(const std::vector<int>& v) const;
  std::vector<int> vector_at(long long index) const;

 private:
  struct PrimePart;
  std::vector<int> x_vector(const Cocycle2& c) const;
  Cocycle2 expand(const std::vector<long long>& x, int modulus) const;

  Group group_;
  int modulus_;
  std::vector<int> gens_;
  std::vector<int> parent_, parent_gen_, bfs_order_;
  std::vector<std::shared_ptr<const PrimePart>> parts_;
  std::vector<int> factors_;
  std::vector<Cocycle2> basis_;
  std::vector<Cocycle2> carries_;
};

// H^2 invariant factors from closed forms when the group is in the catalog.
std::optional<std::vector<int>> catalog_h2(const Group& G);

}  // namespace gth
