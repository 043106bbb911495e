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
#include <numeric>

#include "gth/group.hpp"

namespace gth {

namespace {

std::string power_label(const std::string& name, int e) {
  if (e == 0) return "";
  if (e == 1) return name;
  return name + "^" + std::to_string(e);
}

std::string join_labels(std::initializer_list<std::string> parts) {
  std::string out;
  for (const auto& p : parts) {
    if (p.empty()) continue;
    if (!out.empty()) out += ' ';
    out += p;
  }
  return out.empty() ? "1" : out;
}

void check_order(long long n) {
  if (n > kMaxOrder)
    fail(ErrorKind::Limit, "group order " + std::to_string(n) + " exceeds " +
                               std::to_string(kMaxOrder));
  if (n < 1) fail(ErrorKind::Parse, "group order must be positive");
}

Group cyclic(int n) {
  check_order(n);
  std::vector<int> t(n * n);
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    labels[i] = i == 0 ? "1" : power_label("g", i);
    for (int j = 0; j < n; ++j) t[i * n + j] = (i + j) % n;
  }
  Group g(n, std::move(t), std::move(labels), "C " + std::to_string(n));
  if (n > 1) g.set_generator_names({{"g", 1}});
  return g;
}

// r^i s^j at index i + n j.
Group dihedral(int n) {
  if (n < 1) fail(ErrorKind::Parse, "D n needs n >= 1");
  check_order(2LL * n);
  int N = 2 * n;
  std::vector<int> t(N * N);
  std::vector<std::string> labels(N);
  for (int a = 0; a < N; ++a) {
    int i = a % n, j = a / n;
    labels[a] = join_labels({power_label("r", i), power_label("s", j)});
    for (int b = 0; b < N; ++b) {
      int k = b % n, l = b / n;
      int ri = ((j ? i - k : i + k) % n + n) % n;
      t[a * N + b] = ri + n * ((j + l) % 2);
    }
  }
  Group g(N, std::move(t), std::move(labels), "D " + std::to_string(n));
  g.set_generator_names({{"r", n > 1 ? 1 : 0}, {"s", n}});
  return g;
}

Group permutations(int n, bool even_only) {
  if (n < 1) fail(ErrorKind::Parse, "S n / A n needs n >= 1");
  long long f = 1;
  for (int i = 2; i <= n; ++i) {
    f *= i;
    if (f > 4 * kMaxOrder) break;
  }
  if (even_only && n >= 2) f /= 2;
  check_order(f);
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    if (even_only) {
      int inversions = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) inversions += p[i] > p[j];
      if (inversions % 2) continue;
    }
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  int N = static_cast<int>(perms.size());
  std::vector<std::string> labels(N);
  for (int a = 0; a < N; ++a) labels[a] = cycle_label(perms[a]);
  std::vector<int> t(N * N);
  std::vector<int> comp(n);
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) {
      // (ab)(x) = a(b(x))
      for (int x = 0; x < n; ++x) comp[x] = perms[a][perms[b][x]];
      auto it = std::lower_bound(perms.begin(), perms.end(), comp);
      t[a * N + b] = static_cast<int>(it - perms.begin());
    }
  return Group(N, std::move(t), std::move(labels),
               std::string(even_only ? "A " : "S ") + std::to_string(n));
}

// x^i t^j at index i c + j with t x t^-1 = x^b.
Group semidirect(int a, int b, int c) {
  if (a < 1 || c < 1) fail(ErrorKind::Parse, "C a : b : C c needs a, c >= 1");
  check_order(static_cast<long long>(a) * c);
  b = static_cast<int>(mod_pos(b, a));
  if (gcd64(a, b) != 1 && a > 1)
    fail(ErrorKind::Parse, "semidirect exponent " + std::to_string(b) +
                               " is not coprime to " + std::to_string(a));
  long long bc = 1;
  for (int i = 0; i < c; ++i) bc = bc * b % a;
  if (a > 1 && bc % a != 1)
    fail(ErrorKind::Parse, std::to_string(b) + "^" + std::to_string(c) +
                               " is not 1 mod " + std::to_string(a));
  std::vector<long long> bpow(c, 1);
  for (int j = 1; j < c; ++j) bpow[j] = bpow[j - 1] * b % a;
  int N = a * c;
  std::vector<int> t(N * N);
  std::vector<std::string> labels(N);
  for (int u = 0; u < N; ++u) {
    int i = u / c, j = u % c;
    labels[u] = join_labels({power_label("x", i), power_label("t", j)});
    for (int v = 0; v < N; ++v) {
      int k = v / c, l = v % c;
      int ni = static_cast<int>((i + k * bpow[j]) % a);
      t[u * N + v] = ni * c + (j + l) % c;
    }
  }
  Group g(N, std::move(t), std::move(labels),
          "C " + std::to_string(a) + " : " + std::to_string(b) + " : C " +
              std::to_string(c));
  g.set_generator_names({{"x", a > 1 ? c : 0}, {"t", c > 1 ? 1 : 0}});
  return g;
}

// x^i a^j b^k at index 9i + 3j + k; x^2 = a^3 = b^3 = 1, a central,
// x b x = b^-1.
Group g18() {
  const int N = 18;
  std::vector<int> t(N * N);
  std::vector<std::string> labels(N);
  for (int u = 0; u < N; ++u) {
    int i = u / 9, j = (u / 3) % 3, k = u % 3;
    labels[u] = join_labels(
        {power_label("x", i), power_label("a", j), power_label("b", k)});
    for (int v = 0; v < N; ++v) {
      int l = v / 9, m = (v / 3) % 3, o = v % 3;
      int nk = ((l ? -k : k) + o + 3) % 3;
      t[u * N + v] = ((i + l) % 2) * 9 + ((j + m) % 3) * 3 + nk;
    }
  }
  Group g(N, std::move(t), std::move(labels), "G18");
  g.set_generator_names({{"x", 9}, {"a", 3}, {"b", 1}});
  return g;
}

Group direct_product(const Group& A, const Group& B) {
  check_order(static_cast<long long>(A.order()) * B.order());
  int na = A.order(), nb = B.order(), N = na * nb;
  std::vector<int> t(N * N);
  std::vector<std::string> labels(N);
  for (int u = 0; u < N; ++u) {
    int a = u / nb, b = u % nb;
    labels[u] = "(" + A.label(a) + "," + B.label(b) + ")";
    for (int v = 0; v < N; ++v)
      t[u * N + v] = A.mul(a, v / nb) * nb + B.mul(b, v % nb);
  }
  Group g(N, std::move(t), std::move(labels),
          A.provenance() + " x " + B.provenance());
  std::vector<std::pair<std::string, int>> names;
  for (auto [n, e] : A.generator_names()) names.emplace_back(n, e * nb);
  for (auto [n, e] : B.generator_names()) names.emplace_back(n + "'", e);
  g.set_generator_names(std::move(names));
  return g;
}

struct Parser {
  std::string s;  // lower-cased, whitespace removed
  size_t pos = 0;

  bool eat(std::string_view tok) {
    if (s.compare(pos, tok.size(), tok) == 0) {
      pos += tok.size();
      return true;
    }
    return false;
  }
  [[noreturn]] void error(const std::string& what) {
    fail(ErrorKind::Parse, "group spec: " + what + " at offset " +
                               std::to_string(pos));
  }
  int number() {
    size_t start = pos;
    long long v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + (s[pos] - '0');
      if (v > 1000000) error("number too large");
      ++pos;
    }
    if (pos == start) error("expected a number");
    return static_cast<int>(v);
  }
  bool product_sign() { return eat("x") || eat("\xc3\x97"); }

  Group expr() {
    Group g = term();
    while (pos < s.size() && product_sign()) g = direct_product(g, term());
    return g;
  }
  Group term() {
    if (eat("(")) {
      Group g = expr();
      if (!eat(")")) error("expected ')'");
      return g;
    }
    if (eat("g18")) return g18();
    if (eat("c")) {
      int a = number();
      if (eat(":")) {
        int b = number();
        if (!eat(":")) error("expected ':'");
        if (!eat("c")) error("expected 'C'");
        return semidirect(a, b, number());
      }
      // C a ⋊_b C c
      if (eat("\xe2\x8b\x8a")) {
        eat("_");
        int b = number();
        if (!eat("c")) error("expected 'C'");
        return semidirect(a, b, number());
      }
      return cyclic(a);
    }
    if (eat("d")) return dihedral(number());
    if (eat("s")) return permutations(number(), false);
    if (eat("a")) return permutations(number(), true);
    error("unknown group keyword");
  }
};

}  // namespace

std::string cycle_label(const std::vector<int>& perm) {
  int n = static_cast<int>(perm.size());
  std::vector<bool> seen(n, false);
  std::string out;
  for (int i = 0; i < n; ++i) {
    if (seen[i] || perm[i] == i) continue;
    out += '(';
    for (int j = i; !seen[j]; j = perm[j]) {
      seen[j] = true;
      if (n > 9 && j != i) out += ' ';
      out += std::to_string(j + 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Group construct(std::string_view spec) {
  Parser p;
  for (unsigned char ch : spec) {
    if (std::isspace(ch)) continue;
    p.s += static_cast<char>(std::tolower(ch));
  }
  if (p.s.empty()) fail(ErrorKind::Parse, "group spec: empty");
  Group g = p.expr();
  if (p.pos != p.s.size()) p.error("trailing input");
  return g;
}

}  // namespace gth
