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

#include <algorithm>
#include <unordered_set>
#include <vector>

#include "semiring_lab/semiring.hpp"

namespace semiring_lab {

/// Ideal membership verdict. On failure, `condition` names the first broken
/// requirement (scan order: contains-zero, closed-under-add,
/// absorbs-multiplication) and `witness` holds the offending elements.
struct IdealCheck {
  bool ok = true;
  std::string condition;
  std::vector<int> witness;

  explicit operator bool() const { return ok; }
};

inline IdealCheck is_ideal(const FiniteSemiring& s, ElemSet subset) {
  if (!subset.has(s.zero))
    return {false, "contains-zero", {s.zero}};
  IdealCheck bad;
  subset.for_each([&](int i) {
    if (!bad.ok) return;
    subset.for_each([&](int j) {
      if (!bad.ok) return;
      if (!subset.has(s.add[i][j])) bad = {false, "closed-under-add", {i, j}};
    });
  });
  if (!bad.ok) return bad;
  subset.for_each([&](int i) {
    if (!bad.ok) return;
    for (int x = 0; x < s.n; ++x)
      if (!subset.has(s.mul[i][x])) {
        bad = {false, "absorbs-multiplication", {i, x}};
        return;
      }
  });
  if (!bad.ok) return bad;
  return {};
}

/// Least ideal containing the generators: closure fixpoint over pair sums
/// and arbitrary multiples, seeded with the zero.
inline ElemSet ideal_generated_by(const FiniteSemiring& s, ElemSet generators) {
  ElemSet closed = generators;
  closed.add(s.zero);
  for (;;) {
    ElemSet next = closed;
    closed.for_each([&](int i) {
      closed.for_each([&](int j) { next.add(s.add[i][j]); });
      for (int x = 0; x < s.n; ++x) next.add(s.mul[i][x]);
    });
    if (next == closed) return closed;
    closed = next;
  }
}

/// All ideals in canonical order (cardinality, then mask value).
/// Closure-system breadth-first generation: grow each known ideal by one
/// absent element, close, dedupe.
inline std::vector<ElemSet> enumerate_ideals(const FiniteSemiring& s) {
  std::vector<ElemSet> found;
  std::unordered_set<ElemSet> seen;
  std::vector<ElemSet> frontier{ideal_generated_by(s, ElemSet::empty())};
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<ElemSet> next;
    for (ElemSet ideal : frontier) {
      found.push_back(ideal);
      for (int e = 0; e < s.n; ++e) {
        if (ideal.has(e)) continue;
        ElemSet grown = ideal;
        grown.add(e);
        grown = ideal_generated_by(s, grown);
        if (seen.insert(grown).second) next.push_back(grown);
      }
    }
    frontier = std::move(next);
  }
  std::sort(found.begin(), found.end(), canonical_less);
  return found;
}

/// Elementwise sum-set {a+b | a in A, b in B}.
inline ElemSet sum_set(const FiniteSemiring& s, ElemSet a, ElemSet b) {
  ElemSet out;
  a.for_each([&](int i) { b.for_each([&](int j) { out.add(s.add[i][j]); }); });
  return out;
}

} // namespace semiring_lab
