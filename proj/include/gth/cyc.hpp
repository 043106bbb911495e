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

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace gth {

using Rational = boost::rational<int64_t>;

// Element of Q(zeta_N) in the power basis 1, zeta, ..., zeta^(phi(N)-1),
// reduced modulo the N-th cyclotomic polynomial.
class CycScalar {
 public:
  CycScalar() : CycScalar(1) {}
  explicit CycScalar(int conductor);
  static CycScalar rational(int conductor, Rational r);
  // zeta_N ^ k
  static CycScalar root(int conductor, long long k);

  int conductor() const { return n_; }
  const std::vector<Rational>& coefficients() const { return c_; }
  bool is_zero() const;
  bool is_one() const;

  // Re-expressed in Q(zeta_M); M must be a multiple of the conductor.
  CycScalar lift(int M) const;

  CycScalar& operator+=(const CycScalar& o);
  CycScalar& operator-=(const CycScalar& o);
  CycScalar operator+(const CycScalar& o) const { return CycScalar(*this) += o; }
  CycScalar operator-(const CycScalar& o) const { return CycScalar(*this) -= o; }
  CycScalar operator-() const;
  CycScalar operator*(const CycScalar& o) const;
  CycScalar& operator*=(const CycScalar& o) { return *this = *this * o; }
  CycScalar inverse() const;
  bool operator==(const CycScalar& o) const;

  std::complex<double> to_complex() const;
  // e.g. "1 + 2*z^2 - 1/3*z" with z = zeta_N, or "0".
  std::string to_string() const;

 private:
  int n_;
  std::vector<Rational> c_;
};

// Integer coefficients of the N-th cyclotomic polynomial, constant term first.
const std::vector<int64_t>& cyclotomic_polynomial(int N);
int euler_phi(int N);

}  // namespace gth
