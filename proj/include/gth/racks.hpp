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
#include <vector>

#include "gth/group.hpp"

namespace gth {

struct Rack {
  int size = 0;
  std::vector<int> op;  // [x * size + y] -> x |> y
  std::vector<std::string> labels;
  std::string provenance;

  int act(int x, int y) const { return op[x * size + y]; }
};

// Empty when every left translation is a bijection and self-distributivity
// holds; otherwise the failing law with a witness.
std::optional<std::string> check_rack(const Rack& X);
bool is_quandle(const Rack& X);

// x |> y = (id - T) x + T y on an abelian group A.
Rack affine_rack(const Group& A, const GroupMap& T, std::string provenance);
// A = F_q additive, T = multiplication by b.  q prime, or q = 4 with F_4
// encoded as c0 + c1 w (index c0 + 2 c1), w^2 = w + 1.
Rack affine_rack_q(int q, int b);
// Affine rack on C_n with T = -1.
Rack dihedral_rack(int n);
// Conjugacy class of rep with x |> y = x y x^-1.
Rack conj_class_rack(const Group& G, int rep);
// "D n", "Q q,b", "T", "O j^n" (class of j-cycles in S_n).
Rack rack_by_name(const std::string& name);

// Operation-preserving bijection X -> Y; sizes at most 12.
std::optional<std::vector<int>> rack_iso(const Rack& X, const Rack& Y);
// Sorted cycle types of all left translations.
std::string rack_fingerprint(const Rack& X);

struct CatalogEntry {
  std::string rack;     // rack_by_name argument
  std::string cocycle;  // "-1" or "chi"
  long long nichols_dim = 0;
  std::string group;    // construct() argument
  std::string partner;  // which classified Hopf algebras carry the module
};

const std::vector<CatalogEntry>& catalog();
// Throws ErrorKind::Invalid when the entry is unknown.
const CatalogEntry& catalog_lookup(const std::string& rack, const std::string& cocycle);

struct Realization {
  int rack_size = 0;
  std::vector<int> class_representatives;  // classes of the group matching the rack
  bool by_fingerprint = false;             // true when a class exceeded the iso limit
};
Realization realize(const CatalogEntry& e);

long long bosonization_dimension(const std::string& rack, const std::string& cocycle,
                                 long long hopf_dim);

// {size, op: rows, provenance}
std::string rack_to_json(const Rack& X);

}  // namespace gth
