/*
 *   Copyright 2026 The semiring-lab authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Test-only reference implementations, kept deliberately naive and separate
// from the library code paths they validate: ideal enumeration by filtering
// all 2^n subsets, congruence enumeration by filtering all set partitions.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "semiring_lab/semiring.hpp"

namespace oracle {

using semiring_lab::FiniteSemiring;

// Definition check, written straight from the three ideal conditions.
inline bool is_ideal(const FiniteSemiring& s, std::uint64_t bits) {
  if (!((bits >> s.zero) & 1)) return false;
  for (int i = 0; i < s.n; ++i) {
    if (!((bits >> i) & 1)) continue;
    for (int j = 0; j < s.n; ++j)
      if ((bits >> j) & 1)
        if (!((bits >> s.add[i][j]) & 1)) return false;
    for (int x = 0; x < s.n; ++x)
      if (!((bits >> s.mul[i][x]) & 1)) return false;
  }
  return true;
}

// All ideals by exhausting the power set; capped at n <= 16.
inline std::vector<std::uint64_t> all_ideals(const FiniteSemiring& s) {
  if (s.n > 16) throw std::runtime_error("oracle capped at 16 elements");
  std::vector<std::uint64_t> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << s.n); ++bits)
    if (is_ideal(s, bits)) out.push_back(bits);
  return out;
}

// All set partitions of {0..n-1} as restricted growth strings (block ids by
// first appearance, which matches the library's normalized form).
inline std::vector<std::vector<int>> all_partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> rgs(n, 0);
  auto rec = [&](auto&& self, int i, int max_used) -> void {
    if (i == n) {
      out.push_back(rgs);
      return;
    }
    for (int b = 0; b <= max_used + 1; ++b) {
      rgs[i] = b;
      self(self, i + 1, b > max_used ? b : max_used);
    }
  };
  rec(rec, 1, 0); // rgs[0] is pinned to block 0
  if (n == 0) out.push_back({});
  return out;
}

inline bool is_compatible(const FiniteSemiring& s, const std::vector<int>& block_of) {
  for (int x = 0; x < s.n; ++x)
    for (int y = x + 1; y < s.n; ++y) {
      if (block_of[x] != block_of[y]) continue;
      for (int z = 0; z < s.n; ++z) {
        if (block_of[s.add[x][z]] != block_of[s.add[y][z]]) return false;
        if (block_of[s.mul[x][z]] != block_of[s.mul[y][z]]) return false;
      }
    }
  return true;
}

// All congruences by filtering every partition; Bell(8) = 4140 tops out the
// sizes used in tests.
inline std::vector<std::vector<int>> all_congruences(const FiniteSemiring& s) {
  std::vector<std::vector<int>> out;
  for (const auto& p : all_partitions(s.n))
    if (is_compatible(s, p)) out.push_back(p);
  return out;
}

} // namespace oracle
