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

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "semiring_lab/errors.hpp"
#include "semiring_lab/ideals.hpp"

namespace semiring_lab {

/// A finite lattice: order relation, least-upper/greatest-lower tables and
/// the covering (Hasse) edges of the transitive reduction.
struct FiniteLattice {
  std::vector<std::string> labels;
  std::vector<std::vector<char>> leq;
  std::vector<std::vector<int>> join;
  std::vector<std::vector<int>> meet;
  std::vector<std::pair<int, int>> hasse; // (lower, upper), sorted

  int size() const { return static_cast<int>(labels.size()); }
  bool below(int a, int b) const { return leq[a][b]; }
};

/// Builds join/meet/hasse from an order matrix. Throws internal_error when
/// the order is not a lattice (no unique lub/glb for some pair) — the
/// callers here always pass genuine lattices, so this is a bug trap.
inline FiniteLattice lattice_from_order(std::vector<std::string> labels,
                                        std::vector<std::vector<char>> leq) {
  FiniteLattice lat;
  lat.labels = std::move(labels);
  lat.leq = std::move(leq);
  const int m = lat.size();
  lat.join.assign(m, std::vector<int>(m, -1));
  lat.meet.assign(m, std::vector<int>(m, -1));

  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      int lub = -1, glb = -1;
      for (int c = 0; c < m; ++c) {
        if (lat.leq[a][c] && lat.leq[b][c] && (lub < 0 || lat.leq[c][lub])) lub = c;
        if (lat.leq[c][a] && lat.leq[c][b] && (glb < 0 || lat.leq[glb][c])) glb = c;
      }
      // lub/glb candidates must dominate every other bound
      for (int c = 0; c < m; ++c) {
        if (lat.leq[a][c] && lat.leq[b][c] && (lub < 0 || !lat.leq[lub][c]))
          throw internal_error("order is not a lattice: no least upper bound");
        if (lat.leq[c][a] && lat.leq[c][b] && (glb < 0 || !lat.leq[c][glb]))
          throw internal_error("order is not a lattice: no greatest lower bound");
      }
      lat.join[a][b] = lub;
      lat.meet[a][b] = glb;
    }

  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      if (a == b || !lat.leq[a][b]) continue;
      bool cover = true;
      for (int c = 0; c < m && cover; ++c)
        if (c != a && c != b && lat.leq[a][c] && lat.leq[c][b]) cover = false;
      if (cover) lat.hasse.emplace_back(a, b);
    }
  return lat;
}

struct LawCheck {
  bool holds = true;
  std::array<int, 3> witness{-1, -1, -1};

  explicit operator bool() const { return holds; }
};

/// Modular law: a <= b implies a v (x ^ b) = (a v x) ^ b. Witness (a,b,x).
inline LawCheck is_modular(const FiniteLattice& lat) {
  const int m = lat.size();
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      if (!lat.leq[a][b]) continue;
      for (int x = 0; x < m; ++x)
        if (lat.join[a][lat.meet[x][b]] != lat.meet[lat.join[a][x]][b])
          return {false, {a, b, x}};
    }
  return {};
}

/// Distributive law: a ^ (b v c) = (a ^ b) v (a ^ c). Witness (a,b,c).
inline LawCheck is_distributive(const FiniteLattice& lat) {
  const int m = lat.size();
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c)
        if (lat.meet[a][lat.join[b][c]] !=
            lat.join[lat.meet[a][b]][lat.meet[a][c]])
          return {false, {a, b, c}};
  return {};
}

/// An N5 sublattice: bottom < x < y < top, bottom < z < top, with
/// x v z = y v z = top and x ^ z = y ^ z = bottom.
struct Pentagon {
  int bottom, top, x, y, z;
};

inline std::optional<Pentagon> find_pentagon(const FiniteLattice& lat) {
  const int m = lat.size();
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      if (x == y || !lat.leq[x][y]) continue;
      for (int z = 0; z < m; ++z) {
        if (z == x || z == y) continue;
        int bottom = lat.meet[x][z];
        int top = lat.join[x][z];
        if (lat.meet[y][z] != bottom || lat.join[y][z] != top) continue;
        if (bottom == x || top == y || bottom == z || top == z) continue;
        return Pentagon{bottom, top, x, y, z};
      }
    }
  return std::nullopt;
}

/// DOT rendering, edges written lower -> upper, diagram growing upward.
inline std::string to_dot(const FiniteLattice& lat,
                          const std::string& graph_name = "lattice") {
  std::string out = "digraph " + graph_name + " {\n  rankdir=BT;\n";
  for (int i = 0; i < lat.size(); ++i)
    out += "  n" + std::to_string(i) + " [label=\"" + lat.labels[i] + "\"];\n";
  for (auto [lo, hi] : lat.hasse)
    out += "  n" + std::to_string(lo) + " -> n" + std::to_string(hi) + ";\n";
  out += "}\n";
  return out;
}

/// Id S ordered by inclusion. Meet tables are computed as set
/// intersections and joins as elementwise sum-sets I+J; both are checked
/// against the pure order-theoretic bounds and against the closure of the
/// union, so the textbook identities actually run on every input.
inline FiniteLattice ideal_lattice(const FiniteSemiring& s,
                                   const std::vector<ElemSet>& ideals) {
  const int m = static_cast<int>(ideals.size());
  std::vector<std::string> labels;
  labels.reserve(m);
  for (ElemSet ideal : ideals) labels.push_back(set_to_string(s, ideal));
  std::vector<std::vector<char>> leq(m, std::vector<char>(m, 0));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) leq[a][b] = ideals[a].subset_of(ideals[b]);

  FiniteLattice lat = lattice_from_order(std::move(labels), std::move(leq));

  auto index_of = [&](ElemSet set) {
    for (int i = 0; i < m; ++i)
      if (ideals[i] == set) return i;
    throw internal_error("ideal lattice: join/meet left the ideal family");
  };
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      ElemSet sum = sum_set(s, ideals[a], ideals[b]);
      if (sum != ideal_generated_by(s, ideals[a] | ideals[b]))
        throw internal_error("ideal lattice: I+J differs from the ideal "
                             "generated by the union");
      int join = index_of(sum);
      int meet = index_of(ideals[a] & ideals[b]);
      if (join != lat.join[a][b] || meet != lat.meet[a][b])
        throw internal_error("ideal lattice: set-level join/meet disagree "
                             "with the order-theoretic bounds");
    }
  return lat;
}

inline FiniteLattice ideal_lattice(const FiniteSemiring& s) {
  return ideal_lattice(s, enumerate_ideals(s));
}

} // namespace semiring_lab
