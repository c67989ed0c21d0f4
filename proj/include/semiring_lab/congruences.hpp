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
#include <optional>
#include <set>
#include <vector>

#include "semiring_lab/detail/union_find.hpp"
#include "semiring_lab/lattice.hpp"
#include "semiring_lab/semiring.hpp"

namespace semiring_lab {

/// A partition of the universe, compatible with both operations when used
/// as a congruence. Blocks are numbered by least member, so equality is a
/// plain array comparison.
struct Congruence {
  std::vector<int> block_of;

  int size() const { return static_cast<int>(block_of.size()); }
  bool same(int x, int y) const { return block_of[x] == block_of[y]; }
  int block_count() const {
    int m = 0;
    for (int b : block_of) m = std::max(m, b + 1);
    return m;
  }
  ElemSet block_mask(int block) const {
    ElemSet out;
    for (int x = 0; x < size(); ++x)
      if (block_of[x] == block) out.add(x);
    return out;
  }
  bool operator==(const Congruence&) const = default;
  bool operator<(const Congruence& o) const { return block_of < o.block_of; }
};

inline Congruence normalize_partition(const std::vector<int>& raw) {
  Congruence c;
  c.block_of.assign(raw.size(), -1);
  std::vector<int> renumber;
  for (std::size_t x = 0; x < raw.size(); ++x) {
    int id = -1;
    for (std::size_t k = 0; k < renumber.size(); ++k)
      if (renumber[k] == raw[x]) {
        id = static_cast<int>(k);
        break;
      }
    if (id < 0) {
      id = static_cast<int>(renumber.size());
      renumber.push_back(raw[x]);
    }
    c.block_of[x] = id;
  }
  return c;
}

inline Congruence identity_congruence(int n) {
  Congruence c;
  c.block_of.resize(n);
  for (int i = 0; i < n; ++i) c.block_of[i] = i;
  return c;
}

inline Congruence full_congruence(int n) {
  Congruence c;
  c.block_of.assign(n, 0);
  return c;
}

inline Congruence partition_from_union_find(detail::UnionFind& uf) {
  std::vector<int> raw(uf.parent.size());
  for (std::size_t x = 0; x < raw.size(); ++x) raw[x] = uf.find(static_cast<int>(x));
  return normalize_partition(raw);
}

/// Compatibility with both Cayley tables (the equivalence part is implicit
/// in the block representation).
inline bool is_congruence(const FiniteSemiring& s, const Congruence& c) {
  for (int x = 0; x < s.n; ++x)
    for (int y = x + 1; y < s.n; ++y) {
      if (!c.same(x, y)) continue;
      for (int z = 0; z < s.n; ++z)
        if (!c.same(s.add[x][z], s.add[y][z]) || !c.same(s.mul[x][z], s.mul[y][z]))
          return false;
    }
  return true;
}

/// Least congruence identifying a and b: merge, then close under both
/// translations x -> x+z and x -> x*z until stable.
inline Congruence principal_congruence(const FiniteSemiring& s, int a, int b) {
  detail::UnionFind uf(s.n);
  uf.unite(a, b);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x < s.n; ++x)
      for (int y = x + 1; y < s.n; ++y) {
        if (uf.find(x) != uf.find(y)) continue;
        for (int z = 0; z < s.n; ++z) {
          changed |= uf.unite(s.add[x][z], s.add[y][z]);
          changed |= uf.unite(s.mul[x][z], s.mul[y][z]);
        }
      }
  }
  return partition_from_union_find(uf);
}

/// Join as equivalence relations (transitive closure of the union),
/// verified compatible.
inline Congruence congruence_join(const FiniteSemiring& s, const Congruence& a,
                                  const Congruence& b) {
  detail::UnionFind uf(s.n);
  for (int x = 0; x < s.n; ++x)
    for (int y = x + 1; y < s.n; ++y)
      if (a.same(x, y) || b.same(x, y)) uf.unite(x, y);
  Congruence join = partition_from_union_find(uf);
  if (!is_congruence(s, join))
    throw internal_error("join of two congruences is not compatible");
  return join;
}

/// Meet is plain block intersection; always a congruence.
inline Congruence partition_meet(const Congruence& a, const Congruence& b) {
  std::vector<int> raw(a.block_of.size());
  int n = static_cast<int>(raw.size());
  for (int x = 0; x < n; ++x) raw[x] = a.block_of[x] * n + b.block_of[x];
  return normalize_partition(raw);
}

/// a refines b: every a-block lies inside one b-block.
inline bool refines(const Congruence& a, const Congruence& b) {
  for (int x = 0; x < a.size(); ++x)
    for (int y = x + 1; y < a.size(); ++y)
      if (a.same(x, y) && !b.same(x, y)) return false;
  return true;
}

/// All congruences: join-closure of the principal ones over Delta,
/// canonically ordered (block count descending, then block array).
inline std::vector<Congruence> enumerate_congruences(const FiniteSemiring& s) {
  std::set<Congruence> all;
  all.insert(identity_congruence(s.n));
  std::vector<Congruence> frontier;
  for (int a = 0; a < s.n; ++a)
    for (int b = a + 1; b < s.n; ++b) {
      Congruence c = principal_congruence(s, a, b);
      if (all.insert(c).second) frontier.push_back(c);
    }
  while (!frontier.empty()) {
    std::vector<Congruence> next;
    for (const Congruence& c : frontier)
      for (const Congruence& d : std::vector<Congruence>(all.begin(), all.end())) {
        Congruence j = congruence_join(s, c, d);
        if (all.insert(j).second) next.push_back(j);
      }
    frontier = std::move(next);
  }
  std::vector<Congruence> out(all.begin(), all.end());
  std::sort(out.begin(), out.end(), [](const Congruence& a, const Congruence& b) {
    if (a.block_count() != b.block_count())
      return a.block_count() > b.block_count();
    return a.block_of < b.block_of;
  });
  return out;
}

/// The 0-class. Always an ideal (checked in tests, not here).
inline ElemSet kernel(const FiniteSemiring& s, const Congruence& c) {
  return c.block_mask(c.block_of[s.zero]);
}

/// Blocks in least-member order, e.g. "{0,a}|{1}".
inline std::string congruence_to_string(const FiniteSemiring& s,
                                        const Congruence& c) {
  std::string out;
  for (int b = 0; b < c.block_count(); ++b) {
    if (b) out += "|";
    out += set_to_string(s, c.block_mask(b));
  }
  return out;
}

/// Ker S with its lattice: meet is intersection, join is the least kernel
/// containing the union (Ker S is a closure system). Both are checked
/// against the raw order bounds.
struct KernelFamily {
  std::vector<ElemSet> kernels; // canonical order
  FiniteLattice lattice;
};

namespace detail {

/// Least member of `family` containing `set`; family must be a closure
/// system over its own top.
inline ElemSet closure_in_family(const std::vector<ElemSet>& family, ElemSet set) {
  ElemSet hull = ElemSet::full(64);
  bool found = false;
  for (ElemSet k : family)
    if (set.subset_of(k)) {
      hull &= k;
      found = true;
    }
  if (!found) throw internal_error("closure system has no top above a set");
  for (ElemSet k : family)
    if (hull == k) return hull;
  throw internal_error("family is not intersection-closed");
}

} // namespace detail

inline KernelFamily enumerate_kernels(const FiniteSemiring& s,
                                      const std::vector<Congruence>& congruences) {
  std::vector<ElemSet> kernels;
  for (const Congruence& c : congruences) {
    ElemSet k = kernel(s, c);
    if (std::find(kernels.begin(), kernels.end(), k) == kernels.end())
      kernels.push_back(k);
  }
  std::sort(kernels.begin(), kernels.end(), canonical_less);

  const int m = static_cast<int>(kernels.size());
  std::vector<std::string> labels;
  labels.reserve(m);
  for (ElemSet k : kernels) labels.push_back(set_to_string(s, k));
  std::vector<std::vector<char>> leq(m, std::vector<char>(m, 0));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) leq[a][b] = kernels[a].subset_of(kernels[b]);
  FiniteLattice lat = lattice_from_order(std::move(labels), std::move(leq));

  auto index_of = [&](ElemSet set) {
    for (int i = 0; i < m; ++i)
      if (kernels[i] == set) return i;
    throw internal_error("kernel lattice: meet/join left the kernel family");
  };
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      int meet = index_of(kernels[a] & kernels[b]);
      int join = index_of(detail::closure_in_family(kernels, kernels[a] | kernels[b]));
      if (meet != lat.meet[a][b] || join != lat.join[a][b])
        throw internal_error("kernel lattice: closure-system join/meet "
                             "disagree with the order bounds");
    }
  return {std::move(kernels), std::move(lat)};
}

inline KernelFamily enumerate_kernels(const FiniteSemiring& s) {
  return enumerate_kernels(s, enumerate_congruences(s));
}

/// First pair (in canonical order) where the kernel map breaks the join:
/// [0](A v B) differs from the kernel-lattice join of [0]A and [0]B.
inline std::optional<std::pair<Congruence, Congruence>>
kernel_map_join_failure(const FiniteSemiring& s) {
  std::vector<Congruence> cons = enumerate_congruences(s);
  KernelFamily ker = enumerate_kernels(s, cons);
  for (std::size_t i = 0; i < cons.size(); ++i)
    for (std::size_t j = i + 1; j < cons.size(); ++j) {
      ElemSet join_kernel = kernel(s, congruence_join(s, cons[i], cons[j]));
      ElemSet kernel_join = detail::closure_in_family(
          ker.kernels, kernel(s, cons[i]) | kernel(s, cons[j]));
      if (join_kernel != kernel_join) return std::make_pair(cons[i], cons[j]);
    }
  return std::nullopt;
}

/// Kernel-level distributivity over all congruence triples:
/// [0]((A v B) ^ C) = [0]((A ^ C) v (B ^ C)). Witness indexes the canonical
/// congruence sequence.
struct Dist0Check {
  bool holds = true;
  std::array<int, 3> witness{-1, -1, -1};

  explicit operator bool() const { return holds; }
};

inline Dist0Check is_distributive_at_zero(const FiniteSemiring& s) {
  std::vector<Congruence> cons = enumerate_congruences(s);
  const int m = static_cast<int>(cons.size());
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k) {
        ElemSet lhs = kernel(
            s, partition_meet(congruence_join(s, cons[i], cons[j]), cons[k]));
        ElemSet rhs = kernel(
            s, congruence_join(s, partition_meet(cons[i], cons[k]),
                               partition_meet(cons[j], cons[k])));
        if (lhs != rhs) return {false, {i, j, k}};
      }
  return {};
}

/// Con S ordered by refinement, with partition-level join/meet checked
/// against the order bounds.
inline FiniteLattice congruence_lattice(const FiniteSemiring& s,
                                        const std::vector<Congruence>& cons) {
  const int m = static_cast<int>(cons.size());
  std::vector<std::string> labels;
  labels.reserve(m);
  for (const Congruence& c : cons) labels.push_back(congruence_to_string(s, c));
  std::vector<std::vector<char>> leq(m, std::vector<char>(m, 0));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) leq[a][b] = refines(cons[a], cons[b]);
  FiniteLattice lat = lattice_from_order(std::move(labels), std::move(leq));

  auto index_of = [&](const Congruence& c) {
    for (int i = 0; i < m; ++i)
      if (cons[i] == c) return i;
    throw internal_error("congruence lattice: join/meet left Con S");
  };
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      int join = index_of(congruence_join(s, cons[a], cons[b]));
      int meet = index_of(partition_meet(cons[a], cons[b]));
      if (join != lat.join[a][b] || meet != lat.meet[a][b])
        throw internal_error("congruence lattice: partition join/meet "
                             "disagree with the order bounds");
    }
  return lat;
}

inline FiniteLattice congruence_lattice(const FiniteSemiring& s) {
  return congruence_lattice(s, enumerate_congruences(s));
}

} // namespace semiring_lab
