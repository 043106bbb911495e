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
#include <string>
#include <utility>
#include <vector>

#include "gth/cyc.hpp"
#include "gth/group.hpp"

namespace gth {

// Sparse vector: (index, coefficient) pairs sorted by index, no zeros.
using SparseVec = std::vector<std::pair<int, CycScalar>>;

// Groups F and Gamma with gamma f = (gamma |> f)(gamma <| f) in an ambient
// group, |> a left action of Gamma on F and <| a right action of F on Gamma.
// sigma_gamma(f, f') and tau_f(g1, g2) are exponents of zeta_conductor.
struct MatchedPairData {
  Group F, Gamma;
  std::vector<int> left;   // [gamma * |F| + f] -> gamma |> f
  std::vector<int> right;  // [gamma * |F| + f] -> gamma <| f
  int conductor = 1;
  std::vector<int> sigma;  // [(gamma * |F| + f) * |F| + f']
  std::vector<int> tau;    // [(f * |Gamma| + g1) * |Gamma| + g2]
  std::string note;

  int act_left(int g, int f) const { return left[g * F.order() + f]; }
  int act_right(int g, int f) const { return right[g * F.order() + f]; }
  int sigma_exp(int g, int f, int f2) const {
    return sigma[(static_cast<size_t>(g) * F.order() + f) * F.order() + f2];
  }
  int tau_exp(int f, int g1, int g2) const {
    return tau[(static_cast<size_t>(f) * Gamma.order() + g1) * Gamma.order() + g2];
  }
};

// Trivial sigma and tau; G = F Gamma with F and Gamma meeting trivially.
MatchedPairData matched_pair_from_factorization(const Group& G, const Subgroup& F,
                                                const Subgroup& Gamma);
// Gamma = C3 x C3 = <a, b>, F = <x> of order 2, |> trivial,
// a^i b^j <| x = a^i b^-j, sigma trivial, tau_x(a^i b^j, a^r b^s) = xi^(j r)
// with xi = zeta_3^e, e in {1, 2}.
MatchedPairData a18_matched_pair(int e);

// Empty when the matched-pair axioms and cocycle conditions hold; otherwise
// the first failing law with a witness triple.
std::optional<std::string> check_matched_pair(const MatchedPairData& mp);

struct HopfStructure {
  int dim = 0;
  std::vector<std::string> basis;
  int conductor = 1;
  std::vector<SparseVec> mult;    // [i * dim + j] -> b_i b_j
  SparseVec unit;
  std::vector<SparseVec> comult;  // [k] -> sum over (i * dim + j) of b_i (x) b_j
  std::vector<CycScalar> counit;
  std::vector<SparseVec> antipode;  // [i] -> S(b_i)

  // Present for bicrossed products and their duals.
  std::shared_ptr<const MatchedPairData> source;
  bool is_dual = false;
};

// Basis delta_gamma # f at index gamma * |F| + f.
HopfStructure bicrossed(const MatchedPairData& mp);
// Group algebra kG.
HopfStructure group_algebra(const Group& G);
// Structure constants of the linear dual in the dual basis.
HopfStructure dual(const HopfStructure& H);

// Convolution inverse of the identity; throws when it does not exist.
std::vector<SparseVec> solve_antipode(const HopfStructure& H);

struct HopfCheck {
  bool ok = true;
  std::string failure;  // identity name and witness indices
};
HopfCheck verify_hopf(const HopfStructure& H);

struct GroupLikes {
  Group group;                     // element i corresponds to elements[i]
  std::vector<SparseVec> elements;
};
// Requires a bicrossed product or the dual of one.
GroupLikes grouplikes(const HopfStructure& H);

// Wedderburn block sizes, ascending.
std::vector<int> algebra_type(const HopfStructure& H);
std::vector<int> coalgebra_type(const HopfStructure& H);
// Exact: the trace form of the regular representation is non-degenerate.
bool is_semisimple(const HopfStructure& H);
int center_dimension(const HopfStructure& H);

// "1^6 2^9"
std::string block_string(const std::vector<int>& blocks);

// {dim, basis, mult, comult, counit, antipode, conductor}
std::string hopf_to_json(const HopfStructure& H);

// Sparse helpers in the basis of H.
SparseVec hopf_multiply(const HopfStructure& H, const SparseVec& a, const SparseVec& b);
// Result indexed by i * dim + j.
SparseVec hopf_coproduct(const HopfStructure& H, const SparseVec& a);
CycScalar hopf_counit(const HopfStructure& H, const SparseVec& a);

}  // namespace gth
