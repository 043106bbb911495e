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

#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gth {

constexpr int kMaxOrder = 200;

enum class ErrorKind { Parse, Limit, Invalid, Data, Internal };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

// Fixed-width membership mask for subsets of a group of order <= 256.
struct ElemSet {
  std::array<uint64_t, 4> w{};

  bool has(int i) const { return (w[i >> 6] >> (i & 63)) & 1u; }
  void add(int i) { w[i >> 6] |= uint64_t{1} << (i & 63); }
  int count() const {
    int c = 0;
    for (auto x : w) c += std::popcount(x);
    return c;
  }
  ElemSet operator&(const ElemSet& o) const {
    ElemSet r;
    for (int i = 0; i < 4; ++i) r.w[i] = w[i] & o.w[i];
    return r;
  }
  bool subset_of(const ElemSet& o) const {
    for (int i = 0; i < 4; ++i)
      if (w[i] & ~o.w[i]) return false;
    return true;
  }
  bool operator==(const ElemSet& o) const = default;
};

struct ElemSetHash {
  size_t operator()(const ElemSet& s) const {
    uint64_t h = 0x9e3779b97f4a7c15ull;
    for (auto x : s.w) h = (h ^ x) * 0x100000001b3ull + (h >> 29);
    return static_cast<size_t>(h);
  }
};

// Worker count used by library-internal fan-out; 0 means "use default".
void set_thread_count(int n);
int thread_count();

// Runs body(i) for i in [0, n) across the configured workers. Each index is
// processed exactly once; callers write results into per-index slots.
void parallel_for(int n, const std::function<void(int)>& body);

int64_t gcd64(int64_t a, int64_t b);
int64_t lcm64(int64_t a, int64_t b);
int64_t mod_pos(int64_t a, int64_t m);
// Inverse of a modulo m; requires gcd(a, m) = 1.
int64_t mod_inverse(int64_t a, int64_t m);
std::vector<std::pair<int, int>> factorize(int n);

}  // namespace gth
