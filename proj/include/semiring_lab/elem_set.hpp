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

#pragma once

#include <bit>
#include <cstdint>
#include <functional>

namespace semiring_lab {

/// Subset of a semiring universe as one 64-bit word (element i <-> bit i).
struct ElemSet {
  std::uint64_t bits = 0;

  constexpr ElemSet() = default;
  constexpr explicit ElemSet(std::uint64_t b) : bits(b) {}

  static constexpr ElemSet empty() { return ElemSet{}; }
  static constexpr ElemSet single(int e) { return ElemSet{std::uint64_t{1} << e}; }
  static constexpr ElemSet full(int n) {
    return ElemSet{n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1};
  }

  constexpr bool has(int e) const { return (bits >> e) & 1; }
  constexpr void add(int e) { bits |= std::uint64_t{1} << e; }
  constexpr void remove(int e) { bits &= ~(std::uint64_t{1} << e); }
  constexpr bool is_empty() const { return bits == 0; }
  constexpr int count() const { return std::popcount(bits); }
  constexpr bool subset_of(ElemSet o) const { return (bits & ~o.bits) == 0; }

  constexpr ElemSet operator|(ElemSet o) const { return ElemSet{bits | o.bits}; }
  constexpr ElemSet operator&(ElemSet o) const { return ElemSet{bits & o.bits}; }
  constexpr ElemSet operator-(ElemSet o) const { return ElemSet{bits & ~o.bits}; }
  constexpr ElemSet& operator|=(ElemSet o) { bits |= o.bits; return *this; }
  constexpr ElemSet& operator&=(ElemSet o) { bits &= o.bits; return *this; }
  constexpr bool operator==(const ElemSet&) const = default;

  /// Least element, or -1 when empty.
  constexpr int first() const { return bits == 0 ? -1 : std::countr_zero(bits); }

  /// Visit members in ascending index order.
  template <typename F>
  void for_each(F&& f) const {
    std::uint64_t rest = bits;
    while (rest != 0) {
      int e = std::countr_zero(rest);
      rest &= rest - 1;
      f(e);
    }
  }
};

/// Canonical report order: by cardinality first, then by mask value.
inline bool canonical_less(ElemSet a, ElemSet b) {
  if (a.count() != b.count()) return a.count() < b.count();
  return a.bits < b.bits;
}

} // namespace semiring_lab

template <>
struct std::hash<semiring_lab::ElemSet> {
  std::size_t operator()(const semiring_lab::ElemSet& s) const noexcept {
    return std::hash<std::uint64_t>{}(s.bits);
  }
};
