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

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gth/common.hpp"

namespace gth {

// A finite group as a dense multiplication table; element 0 is the identity.
class Group {
 public:
  Group() = default;
  // Validates closure, identity at 0, inverses and associativity.
  Group(int order, std::vector<int> table, std::vector<std::string> labels,
        std::string provenance);
  // Skips validation; for tables derived from an already valid group.
  static Group trusted(int order, std::vector<int> table,
                       std::vector<std::string> labels, std::string provenance);

  int order() const { return n_; }
  int mul(int a, int b) const { return mul_[a * n_ + b]; }
  int inv(int a) const { return inv_[a]; }
  int elem_order(int a) const { return ord_[a]; }
  int pow(int a, long long k) const;
  // g x g^-1
  int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }
  int commutator(int a, int b) const;
  const std::string& label(int a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& provenance() const { return provenance_; }
  const std::vector<int>& table() const { return mul_; }

  // Named generators used by word(); constructors register them.
  void set_generator_names(std::vector<std::pair<std::string, int>> names) {
    gen_names_ = std::move(names);
  }
  const std::vector<std::pair<std::string, int>>& generator_names() const {
    return gen_names_;
  }
  // Index of the element with the given label, or -1.
  int find_label(std::string_view label) const;
  // Evaluates a word such as "x^3 a^2 b^-1" in the named generators.
  int word(std::string_view w) const;

 private:
  int n_ = 0;
  std::vector<int> mul_;
  std::vector<int> inv_;
  std::vector<int> ord_;
  std::vector<std::string> labels_;
  std::string provenance_;
  std::vector<std::pair<std::string, int>> gen_names_;
};

// A subgroup in canonical form: members sorted ascending (identity first).
struct Subgroup {
  std::vector<int> members;
  ElemSet mask;

  int order() const { return static_cast<int>(members.size()); }
  bool has(int g) const { return mask.has(g); }
  // Position of g in members, or -1.
  int position(int g) const;
  bool operator==(const Subgroup& o) const { return mask == o.mask; }
};

// Canonical ordering: by order, then members lexicographically.
bool subgroup_less(const Subgroup& a, const Subgroup& b);

struct GroupMap {
  std::vector<int> img;
  int operator()(int g) const { return img[g]; }
  bool operator==(const GroupMap& o) const = default;
};

struct AbelianShape {
  std::vector<int> factors;     // d1 | d2 | ... | dk, all > 1
  std::vector<int> generators;  // element of exact order d_i each
};

struct Quotient {
  Group group;
  std::vector<int> projection;  // G element -> quotient element
  std::vector<int> lift;        // quotient element -> coset representative
};

struct DoubleCoset {
  int representative = 0;
  int size = 0;
  Subgroup stabilizer;  // F ∩ gΓg^-1
};

// Group expression parser: C n, D n, S n, A n, X x Y, C a : b : C c, G18.
Group construct(std::string_view spec);
// Cycle-notation label of a permutation given as images of 1..k.
std::string cycle_label(const std::vector<int>& perm);

Subgroup make_subgroup(const Group& G, std::vector<int> members);
Subgroup whole(const Group& G);
Subgroup trivial_subgroup(const Group& G);
Subgroup generate(const Group& G, const std::vector<int>& gens);
Subgroup join(const Group& G, const Subgroup& a, const Subgroup& b);
Subgroup intersect(const Subgroup& a, const Subgroup& b);
bool is_subgroup(const Group& G, const std::vector<int>& members);
// |AB| computed from |A||B|/|A∩B|.
int product_size(const Subgroup& a, const Subgroup& b);

// Every subgroup exactly once, sorted by (order, members).
std::vector<Subgroup> all_subgroups(const Group& G);
// Index of s in a canonical subgroup list, or -1.
int subgroup_index(const std::vector<Subgroup>& list, const Subgroup& s);

Subgroup conjugate(const Group& G, const Subgroup& s, int g);
Subgroup image(const Subgroup& s, const GroupMap& f, const Group& target);
// Orbits of items under conjugation, each sorted with its least member first
// (indices into items); orbits ordered by their representative.
std::vector<std::vector<int>> conjugacy_partition(
    const Group& G, const std::vector<Subgroup>& items);
// Conjugacy classes of elements of s under conjugation by s.
std::vector<std::vector<int>> conjugacy_classes(const Group& G,
                                                const Subgroup& s);

bool is_normal(const Group& G, const Subgroup& s);
bool is_abelian(const Group& G, const Subgroup& s);
Subgroup center(const Group& G);
Subgroup normalizer(const Group& G, const Subgroup& s);
Subgroup centralizer(const Group& G, int g);
Subgroup centralizer_in(const Group& G, const Subgroup& within, int g);
Subgroup commutator_subgroup(const Group& G, const Subgroup& s);
Quotient quotient(const Group& G, const Subgroup& normal);
// The subgroup as a standalone group; element i is s.members[i].
Group subgroup_group(const Group& G, const Subgroup& s);

// Greedy minimal generating set of s.
std::vector<int> min_generating_set(const Group& G, const Subgroup& s);
std::vector<int> min_generating_set(const Group& G);

bool is_homomorphism(const Group& src, const Group& dst, const GroupMap& f);
bool is_bijective(const GroupMap& f, int target_order);
GroupMap compose(const GroupMap& outer, const GroupMap& inner);
GroupMap inverse_map(const GroupMap& f);
GroupMap identity_map(const Group& G);
GroupMap inner_automorphism(const Group& G, int g);

// The full automorphism group, identity first, in deterministic order.
std::vector<GroupMap> automorphisms(const Group& G);
// A small generating set of Aut G drawn from automorphisms(G).
std::vector<GroupMap> automorphism_generators(const Group& G);
std::optional<GroupMap> isomorphism(const Group& G, const Group& H);
bool isomorphic(const Group& G, const Group& H);

AbelianShape abelian_shape(const Group& G, const Subgroup& a);
// Abstract abelian group C_{d1} x ... x C_{dk}; element index is the
// mixed-radix encoding of its coordinate vector (first coordinate slowest).
Group character_group(const AbelianShape& shape);
// Coordinates of every member of a in terms of the shape's generators.
std::vector<std::vector<int>> shape_coordinates(const Group& G,
                                                const Subgroup& a,
                                                const AbelianShape& shape);
// chi(a) as an exponent of exp(2 pi i / lcm): pairing of the character with
// coordinates c against an element with coordinates x.
int character_pairing(const AbelianShape& shape, const std::vector<int>& c,
                      const std::vector<int>& x, int lcm_out);

std::vector<DoubleCoset> double_cosets(const Group& G, const Subgroup& F,
                                       const Subgroup& Gamma);

// Name from the candidate catalog of the same order, or abelian invariants,
// or "order-k, unidentified".
std::string identify(const Group& G);
// Catalog spec strings tried by identify for a given order.
std::vector<std::string> catalog_candidates(int order);

}  // namespace gth
