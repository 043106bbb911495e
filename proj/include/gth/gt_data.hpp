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
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "gth/cohomology.hpp"
#include "gth/group.hpp"

namespace gth {

// (F, alpha, Gamma, beta): subgroup indices into the context's subgroup list
// and class vectors in H^2(F) and H^2(Gamma).
struct GTDatum {
  int F = 0, Gamma = 0;
  std::vector<int> alpha, beta;
  bool operator==(const GTDatum& o) const = default;
};

struct Triviality {
  bool cocommutative = false, commutative = false;
  bool trivial() const { return cocommutative || commutative; }
};

struct DatumClass {
  GTDatum rep;  // canonical (least) member of the orbit
  int orbit_size = 0;
  int F_order = 0, Gamma_order = 0, intersection_order = 0;
  int alpha_order = 1, beta_order = 1;
  Triviality triv;
  bool twist = false, abelian_extension = false;
  long long gh_order = 0;
  std::string gh_type;  // empty when the group is not constructed
  int dual_of = -1;     // index of the dual class
};

// Unordered (F, Gamma) case up to Aut G, both factors non-trivial.
struct RawCase {
  int F = 0, Gamma = 0;
  int intersection_order = 0;
  bool has_nontrivial = false;
};

struct Classification {
  std::vector<DatumClass> classes;  // all classes, ordered by representative
  std::vector<RawCase> raw_cases;
};

// All group-theoretical machinery for one parent group.  Cocycles use the
// context modulus |G| on every subgroup.
class GTContext {
 public:
  explicit GTContext(const Group& G);

  const Group& group() const { return G_; }
  int modulus() const { return modulus_; }
  const std::vector<Subgroup>& subgroups() const { return subs_; }
  int index_of(const Subgroup& s) const;
  int whole_index() const { return static_cast<int>(subs_.size()) - 1; }
  int trivial_index() const { return 0; }
  const std::vector<GroupMap>& automorphisms() const;
  const std::vector<GroupMap>& automorphism_generators() const;

  const CohomologyGroup& h2(int sub) const;
  const CohomologyGroup& h2_global() const { return h2(whole_index()); }
  // Class of the restriction from subgroup `from` to subgroup `to` <= from.
  std::vector<int> restrict_class(int from, const std::vector<int>& v, int to) const;
  // Pushforward along an automorphism; *to receives the image subgroup.
  std::vector<int> transport_class(int from, const std::vector<int>& v,
                                   const GroupMap& theta, int* to) const;
  // Class of the conjugate by g on gFg^-1.
  std::vector<int> conjugate_class(int from, const std::vector<int>& v, int g,
                                   int* to) const;
  // Nondegenerate classes of H^2(subgroup).
  const std::vector<bool>& nondegenerate_classes(int sub) const;

  bool is_factorization(int F, int Gamma) const;
  // All ordered factorizing pairs.
  std::vector<std::pair<int, int>> factorizations() const;
  bool is_valid(const GTDatum& d) const;
  std::vector<GTDatum> enumerate_data() const;

  // (theta, gamma) . d with gamma a class vector of H^2(G).
  GTDatum act(const GTDatum& d, const GroupMap& theta, const std::vector<int>& gamma) const;
  GTDatum dual(const GTDatum& d) const;
  Triviality triviality(const GTDatum& d) const;
  bool is_twist(const GTDatum& d) const;
  bool is_abelian_extension(const GTDatum& d) const;
  GTDatum reduce_by_global_class(const GTDatum& d) const;
  long long grouplike_order(const GTDatum& d) const;
  std::optional<Group> grouplike_group(const GTDatum& d) const;
  int module_tensor_rank(const GTDatum& d) const;
  // Orbit-canonical representative of d.
  GTDatum canonical(const GTDatum& d) const;

  // G(H) types are built for non-trivial classes, or all when all_types.
  Classification classify(bool all_types = false) const;

 private:
  struct Cache;
  bool class_invariant_under(int sub, const std::vector<int>& v, int g) const;
  Cocycle2 cocycle_on(int sub, const std::vector<int>& v) const;

  Group G_;
  int modulus_;
  std::vector<Subgroup> subs_;
  std::shared_ptr<Cache> cache_;
};

// Expresses a subgroup-local cocycle (indexed by positions in `outer`) on
// the positions of `inner` <= outer.
Cocycle2 restrict_between(const Cocycle2& c, const Subgroup& outer, const Subgroup& inner);

}  // namespace gth
