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

#include "gth/cyc.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

#include "gth/common.hpp"

namespace gth {

namespace {

// Mixed int/rational comparisons recurse under C++20 rewritten operators.
const Rational kZero(0), kOne(1);

struct Field {
  int n = 1, phi = 1;
  std::vector<int64_t> poly;                    // monic, degree phi
  std::vector<std::vector<Rational>> powers;    // zeta^k for k < n
};

std::vector<int64_t> poly_div_exact(std::vector<int64_t> num, const std::vector<int64_t>& den) {
  const int dn = static_cast<int>(den.size()) - 1;
  const int nn = static_cast<int>(num.size()) - 1;
  std::vector<int64_t> q(nn - dn + 1, 0);
  for (int i = nn; i >= dn; --i) {
    int64_t c = num[i] / den[dn];
    q[i - dn] = c;
    for (int j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return q;
}

const Field& field(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<Field>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[n];
  if (slot) return *slot;
  auto f = std::make_unique<Field>();
  f->n = n;
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
  std::vector<int64_t> p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d) continue;
    // Recursion under the same lock: compute Phi_d by hand.
    std::vector<int64_t> pd(d + 1, 0);
    pd[0] = -1;
    pd[d] = 1;
    for (int e = 1; e < d; ++e)
      if (d % e == 0) {
        auto it = cache.find(e);
        if (it == cache.end() || !it->second) fail(ErrorKind::Internal, "cyclotomic order");
        pd = poly_div_exact(pd, it->second->poly);
      }
    p = poly_div_exact(p, pd);
  }
  f->poly = p;
  f->phi = static_cast<int>(p.size()) - 1;
  // zeta^k reduced: start from 1 and multiply by x.
  std::vector<Rational> cur(f->phi, Rational(0));
  cur[0] = 1;
  for (int k = 0; k < n; ++k) {
    f->powers.push_back(cur);
    if (f->phi == 1) {
      // Q: zeta_1 = 1, zeta_2 = -1.
      cur[0] = cur[0] * Rational(-p[0]);
      continue;
    }
    Rational top = cur[f->phi - 1];
    for (int i = f->phi - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    for (int i = 0; i < f->phi; ++i) cur[i] -= top * Rational(p[i]);
  }
  slot = std::move(f);
  return *slot;
}

// Makes sure every divisor field exists before n itself (needed by field()).
const Field& field_checked(int n) {
  if (n < 1) fail(ErrorKind::Invalid, "cyclotomic conductor must be positive");
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) field(d);
  return field(n);
}

}  // namespace

const std::vector<int64_t>& cyclotomic_polynomial(int N) { return field_checked(N).poly; }

int euler_phi(int N) { return field_checked(N).phi; }

CycScalar::CycScalar(int conductor) : n_(conductor) {
  c_.assign(field_checked(conductor).phi, Rational(0));
}

CycScalar CycScalar::rational(int conductor, Rational r) {
  CycScalar s(conductor);
  s.c_[0] = r;
  return s;
}

CycScalar CycScalar::root(int conductor, long long k) {
  const Field& f = field_checked(conductor);
  CycScalar s(conductor);
  s.c_ = f.powers[static_cast<size_t>(mod_pos(k, conductor))];
  return s;
}

bool CycScalar::is_zero() const {
  for (const auto& x : c_)
    if (x != kZero) return false;
  return true;
}

bool CycScalar::is_one() const {
  if (c_[0] != kOne) return false;
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != kZero) return false;
  return true;
}

CycScalar CycScalar::lift(int M) const {
  if (M == n_) return *this;
  if (M % n_) fail(ErrorKind::Internal, "lift to a non-multiple conductor");
  const Field& f = field_checked(M);
  CycScalar out(M);
  const int step = M / n_;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == kZero) continue;
    const auto& z = f.powers[(i * step) % M];
    for (int j = 0; j < f.phi; ++j) out.c_[j] += c_[i] * z[j];
  }
  return out;
}

namespace {
int common(const CycScalar& a, const CycScalar& b) {
  return static_cast<int>(lcm64(a.conductor(), b.conductor()));
}
}  // namespace

CycScalar& CycScalar::operator+=(const CycScalar& o) {
  if (o.n_ != n_) {
    int M = common(*this, o);
    *this = lift(M);
    return *this += o.lift(M);
  }
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CycScalar& CycScalar::operator-=(const CycScalar& o) {
  if (o.n_ != n_) {
    int M = common(*this, o);
    *this = lift(M);
    return *this -= o.lift(M);
  }
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

CycScalar CycScalar::operator-() const {
  CycScalar r(*this);
  for (auto& x : r.c_) x = -x;
  return r;
}

CycScalar CycScalar::operator*(const CycScalar& o) const {
  if (o.n_ != n_) {
    int M = common(*this, o);
    return lift(M) * o.lift(M);
  }
  const Field& f = field_checked(n_);
  const int d = f.phi;
  std::vector<Rational> prod(2 * d - 1, Rational(0));
  for (int i = 0; i < d; ++i) {
    if (c_[i] == kZero) continue;
    for (int j = 0; j < d; ++j)
      if (o.c_[j] != kZero) prod[i + j] += c_[i] * o.c_[j];
  }
  for (int k = 2 * d - 2; k >= d; --k) {
    if (prod[k] == kZero) continue;
    Rational t = prod[k];
    for (int i = 0; i <= d; ++i) prod[k - d + i] -= t * Rational(f.poly[i]);
  }
  CycScalar r(n_);
  for (int i = 0; i < d; ++i) r.c_[i] = prod[i];
  return r;
}

CycScalar CycScalar::inverse() const {
  if (is_zero()) fail(ErrorKind::Invalid, "inverse of zero");
  const Field& f = field_checked(n_);
  const int d = f.phi;
  // Columns: this * z^j; solve M x = e_0.
  std::vector<std::vector<Rational>> M(d, std::vector<Rational>(d + 1, Rational(0)));
  CycScalar col = *this;
  CycScalar z = root(n_, 1);
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < d; ++i) M[i][j] = col.c_[i];
    col = col * z;
  }
  M[0][d] = 1;
  for (int c = 0; c < d; ++c) {
    int piv = c;
    while (piv < d && M[piv][c] == kZero) ++piv;
    if (piv == d) fail(ErrorKind::Internal, "singular multiplication matrix");
    std::swap(M[piv], M[c]);
    Rational inv = Rational(1) / M[c][c];
    for (auto& x : M[c]) x *= inv;
    for (int r = 0; r < d; ++r) {
      if (r == c || M[r][c] == kZero) continue;
      Rational t = M[r][c];
      for (int k = c; k <= d; ++k) M[r][k] -= t * M[c][k];
    }
  }
  CycScalar r(n_);
  for (int i = 0; i < d; ++i) r.c_[i] = M[i][d];
  return r;
}

bool CycScalar::operator==(const CycScalar& o) const {
  if (o.n_ != n_) {
    int M = common(*this, o);
    return lift(M).c_ == o.lift(M).c_;
  }
  return c_ == o.c_;
}

std::complex<double> CycScalar::to_complex() const {
  std::complex<double> z = std::polar(1.0, 2 * std::numbers::pi / n_), acc = 0, p = 1;
  for (const auto& x : c_) {
    acc += p * (static_cast<double>(x.numerator()) / static_cast<double>(x.denominator()));
    p *= z;
  }
  return acc;
}

std::string CycScalar::to_string() const {
  std::string out;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == kZero) continue;
    Rational x = c_[i];
    bool neg = x < kZero;
    if (neg) x = -x;
    std::string num = std::to_string(x.numerator());
    if (x.denominator() != 1) num += "/" + std::to_string(x.denominator());
    std::string term;
    if (i == 0) {
      term = num;
    } else {
      term = (x == kOne ? "" : num + "*") + "z";
      if (i > 1) term += "^" + std::to_string(i);
    }
    if (out.empty())
      out = (neg ? "-" : "") + term;
    else
      out += (neg ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

}  // namespace gth
