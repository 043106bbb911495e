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

// Linear algebra over Z/p^a and Z/M for the cohomology and group-like code.
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gth/common.hpp"

namespace gth {

inline int valuation(long long x, int p, int a) {
  if (x == 0) return a;
  int v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

inline long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Dense matrix over Z/q, q = p^a.
struct LocalMat {
  int rows = 0, cols = 0;
  std::vector<int> d;
  int& at(int r, int c) { return d[static_cast<size_t>(r) * cols + c]; }
  int at(int r, int c) const { return d[static_cast<size_t>(r) * cols + c]; }
};

inline LocalMat identity_mat(int n) {
  LocalMat m{n, n, std::vector<int>(static_cast<size_t>(n) * n, 0)};
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

// Smith form by unimodular row and column operations; the column operations
// are accumulated as V (M V has the reduced shape) together with V^-1.
struct LocalSmith {
  std::vector<int> diag;  // length cols; p^v or 0
  LocalMat V, Vinv;
};

inline LocalSmith local_smith(LocalMat M, int p, int a, int q,
                              std::vector<long long>* rhs = nullptr) {
  const int R = M.rows, C = M.cols;
  LocalSmith out;
  out.V = identity_mat(C);
  out.Vinv = identity_mat(C);
  out.diag.assign(C, 0);
  auto col_axpy = [&](int dst, int src, long long c) {  // col dst += c col src
    c = mod_pos(c, q);
    if (!c) return;
    for (int r = 0; r < R; ++r)
      M.at(r, dst) = static_cast<int>((M.at(r, dst) + c * M.at(r, src)) % q);
    for (int r = 0; r < C; ++r)
      out.V.at(r, dst) = static_cast<int>((out.V.at(r, dst) + c * out.V.at(r, src)) % q);
    long long nc = q - c;
    for (int k = 0; k < C; ++k)
      out.Vinv.at(src, k) =
          static_cast<int>((out.Vinv.at(src, k) + nc * out.Vinv.at(dst, k)) % q);
  };
  auto col_swap = [&](int i, int j) {
    if (i == j) return;
    for (int r = 0; r < R; ++r) std::swap(M.at(r, i), M.at(r, j));
    for (int r = 0; r < C; ++r) std::swap(out.V.at(r, i), out.V.at(r, j));
    for (int k = 0; k < C; ++k) std::swap(out.Vinv.at(i, k), out.Vinv.at(j, k));
  };
  auto col_scale = [&](int i, long long u) {
    long long ui = mod_inverse(u, q);
    for (int r = 0; r < R; ++r) M.at(r, i) = static_cast<int>(M.at(r, i) * u % q);
    for (int r = 0; r < C; ++r) out.V.at(r, i) = static_cast<int>(out.V.at(r, i) * u % q);
    for (int k = 0; k < C; ++k)
      out.Vinv.at(i, k) = static_cast<int>(out.Vinv.at(i, k) * ui % q);
  };
  for (int t = 0; t < std::min(R, C); ++t) {
    int br = -1, bc = -1, bv = a;
    for (int r = t; r < R && bv > 0; ++r)
      for (int c = t; c < C; ++c) {
        int x = M.at(r, c);
        if (!x) continue;
        int v = valuation(x, p, a);
        if (v < bv) {
          bv = v;
          br = r;
          bc = c;
          if (v == 0) break;
        }
      }
    if (br < 0) break;
    if (br != t) {
      for (int c = 0; c < C; ++c) std::swap(M.at(br, c), M.at(t, c));
      if (rhs) std::swap((*rhs)[br], (*rhs)[t]);
    }
    col_swap(bc, t);
    long long pv = ipow(p, bv);
    col_scale(t, mod_inverse(M.at(t, t) / pv, q));
    // Pivot p^bv has minimal valuation, so it divides its row and column.
    for (int r = t + 1; r < R; ++r) {
      int x = M.at(r, t);
      if (!x) continue;
      long long f = x / pv;
      for (int c = t; c < C; ++c)
        M.at(r, c) = static_cast<int>(mod_pos(M.at(r, c) - f * M.at(t, c), q));
      if (rhs) (*rhs)[r] = mod_pos((*rhs)[r] - f * (*rhs)[t], q);
    }
    for (int c = t + 1; c < C; ++c) {
      int x = M.at(t, c);
      if (x) col_axpy(c, t, -(x / pv));
    }
    out.diag[t] = static_cast<int>(pv % q);
  }
  return out;
}

// Incremental row reduction over Z/q keeping a generating set of the row
// module with distinct leading columns.
class StreamingEchelon {
 public:
  StreamingEchelon(int cols, int p, int a, int q)
      : cols_(cols), p_(p), a_(a), q_(q), pivot_(cols) {}

  void insert(std::vector<int> row) {
    int start = 0;
    for (;;) {
      int c = start;
      while (c < cols_ && row[c] == 0) ++c;
      if (c == cols_) return;
      int vr = valuation(row[c], p_, a_);
      auto& P = pivot_[c];
      if (P.empty()) {
        normalize(row, c, vr);
        P = std::move(row);
        return;
      }
      int vp = valuation(P[c], p_, a_);
      if (vr >= vp) {
        long long f = row[c] / ipow(p_, vp);
        for (int k = c; k < cols_; ++k)
          if (P[k]) row[k] = static_cast<int>(mod_pos(row[k] - f * P[k], q_));
      } else {
        normalize(row, c, vr);
        std::swap(row, P);
        long long f = row[c] / ipow(p_, vr);
        for (int k = c; k < cols_; ++k)
          if (P[k]) row[k] = static_cast<int>(mod_pos(row[k] - f * P[k], q_));
      }
      start = c;
    }
  }

  LocalMat matrix() const {
    LocalMat m;
    m.cols = cols_;
    for (const auto& r : pivot_)
      if (!r.empty()) {
        m.d.insert(m.d.end(), r.begin(), r.end());
        ++m.rows;
      }
    return m;
  }

 private:
  void normalize(std::vector<int>& row, int c, int v) {
    long long u = mod_inverse(row[c] / ipow(p_, v), q_);
    for (int k = c; k < cols_; ++k)
      if (row[k]) row[k] = static_cast<int>(row[k] * u % q_);
  }

  int cols_, p_, a_, q_;
  std::vector<std::vector<int>> pivot_;
};

// Solves A x = b over Z/M (A given as rows); empty when inconsistent.
inline std::optional<std::vector<long long>> solve_mod(
    const std::vector<std::vector<long long>>& A, const std::vector<long long>& b,
    int cols, long long M) {
  const int R = static_cast<int>(A.size());
  std::vector<long long> x(cols, 0);
  long long done = 1;
  for (auto [p, a] : factorize(static_cast<int>(M))) {
    int q = static_cast<int>(ipow(p, a));
    LocalMat m{R, cols, std::vector<int>(static_cast<size_t>(R) * cols)};
    std::vector<long long> rhs(R);
    for (int r = 0; r < R; ++r) {
      for (int c = 0; c < cols; ++c) m.at(r, c) = static_cast<int>(mod_pos(A[r][c], q));
      rhs[r] = mod_pos(b[r], q);
    }
    LocalSmith s = local_smith(std::move(m), p, a, q, &rhs);
    std::vector<long long> y(cols, 0);
    for (int r = 0; r < R; ++r) {
      int d = r < cols ? s.diag[r] : 0;
      if (d == 0) {
        if (rhs[r]) return std::nullopt;
        continue;
      }
      if (rhs[r] % d) return std::nullopt;
      y[r] = rhs[r] / d;
    }
    // CRT: x = x mod done, xq mod q.
    long long inv = mod_inverse(done % q, q);
    for (int c = 0; c < cols; ++c) {
      long long xq = 0;
      for (int k = 0; k < cols; ++k) xq += s.V.at(c, k) * y[k] % q;
      xq %= q;
      long long t = mod_pos((xq - x[c]) % q * inv, q);
      x[c] += done * t;
    }
    done *= q;
  }
  return x;
}

}  // namespace gth
