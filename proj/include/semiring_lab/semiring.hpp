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

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "semiring_lab/elem_set.hpp"
#include "semiring_lab/errors.hpp"

namespace semiring_lab {

/// Raw user input for a semiring: element names plus two Cayley tables of
/// names. Nothing is validated until make_semiring / verify_axioms runs.
struct RawTables {
  std::string name;
  std::vector<std::string> elements;
  std::string zero;
  std::vector<std::vector<std::string>> add;
  std::vector<std::vector<std::string>> mul;
};

struct AxiomViolation {
  std::string axiom;        // e.g. "distributivity"
  std::vector<int> witness; // element indices in declared order
};

struct AxiomReport {
  bool valid = true;
  std::vector<AxiomViolation> violations;
};

/// Carries the failed report when construction of an invalid algebra is
/// attempted.
class axiom_error : public error {
public:
  AxiomReport report;
  explicit axiom_error(AxiomReport r, const std::string& msg)
      : error(msg), report(std::move(r)) {}
};

/// A finite commutative semiring (S,+,*,0) on at most 64 elements.
/// Immutable after construction; the zero always sits at index 0 (inputs
/// declaring it elsewhere are permuted, see declared_index).
class FiniteSemiring {
public:
  static constexpr int max_elements = 64;

  std::string name;
  int n = 0;
  std::vector<std::string> elem_names;
  std::vector<std::vector<int>> add;
  std::vector<std::vector<int>> mul;
  int zero = 0;
  /// declared_index[i] = position of internal element i in the input tables.
  std::vector<int> declared_index;

  int plus(int i, int j) const { return add[i][j]; }
  int times(int i, int j) const { return mul[i][j]; }
  const std::string& name_of(int i) const { return elem_names[i]; }
  ElemSet universe() const { return ElemSet::full(n); }

  std::optional<int> index_of(const std::string& elem) const {
    for (int i = 0; i < n; ++i)
      if (elem_names[i] == elem) return i;
    return std::nullopt;
  }
};

namespace detail {

/// Name->index resolution shared by verify_axioms and make_semiring.
/// Throws format_error on duplicate names, unknown zero, bad table shape or
/// entries that are not declared names.
struct ResolvedTables {
  int n = 0;
  int zero = 0;
  std::vector<std::vector<int>> add, mul;
};

inline ResolvedTables resolve_tables(const RawTables& raw) {
  ResolvedTables out;
  out.n = static_cast<int>(raw.elements.size());
  if (out.n < 1)
    throw format_error("semiring '" + raw.name + "': no elements declared");
  if (out.n > FiniteSemiring::max_elements)
    throw capacity_error("semiring '" + raw.name + "': " +
                         std::to_string(out.n) + " elements exceeds the cap of " +
                         std::to_string(FiniteSemiring::max_elements));

  std::unordered_map<std::string, int> index;
  for (int i = 0; i < out.n; ++i) {
    if (!index.emplace(raw.elements[i], i).second)
      throw format_error("semiring '" + raw.name + "': duplicate element name '" +
                         raw.elements[i] + "'");
  }
  auto zero_it = index.find(raw.zero);
  if (zero_it == index.end())
    throw format_error("semiring '" + raw.name + "': zero '" + raw.zero +
                       "' is not a declared element");
  out.zero = zero_it->second;

  auto resolve = [&](const std::vector<std::vector<std::string>>& table,
                     const char* which) {
    if (static_cast<int>(table.size()) != out.n)
      throw format_error("semiring '" + raw.name + "': " + which + " table has " +
                         std::to_string(table.size()) + " rows, expected " +
                         std::to_string(out.n));
    std::vector<std::vector<int>> t(out.n, std::vector<int>(out.n));
    for (int i = 0; i < out.n; ++i) {
      if (static_cast<int>(table[i].size()) != out.n)
        throw format_error("semiring '" + raw.name + "': " + which + " row " +
                           std::to_string(i) + " has " +
                           std::to_string(table[i].size()) + " entries, expected " +
                           std::to_string(out.n));
      for (int j = 0; j < out.n; ++j) {
        auto it = index.find(table[i][j]);
        if (it == index.end())
          throw format_error("semiring '" + raw.name + "': " + which + "[" +
                             std::to_string(i) + "][" + std::to_string(j) +
                             "] entry '" + table[i][j] + "' is not a declared element");
        t[i][j] = it->second;
      }
    }
    return t;
  };
  out.add = resolve(raw.add, "add");
  out.mul = resolve(raw.mul, "mul");
  return out;
}

} // namespace detail

/// Checks all semiring axioms over the declared tables. Format problems
/// (duplicate names, unknown zero, stray table entries) throw format_error;
/// axiom failures are collected in the report, first witness per axiom.
inline AxiomReport verify_axioms(const RawTables& raw) {
  auto t = detail::resolve_tables(raw);
  const auto& add = t.add;
  const auto& mul = t.mul;
  const int n = t.n;
  const int zero = t.zero;

  AxiomReport report;
  auto violation = [&](const std::string& axiom, std::vector<int> witness) {
    report.valid = false;
    report.violations.push_back({axiom, std::move(witness)});
  };

  auto first_noncommutative = [&](const std::vector<std::vector<int>>& op,
                                  const std::string& axiom) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (op[i][j] != op[j][i]) {
          violation(axiom, {i, j});
          return;
        }
  };
  auto first_nonassociative = [&](const std::vector<std::vector<int>>& op,
                                  const std::string& axiom) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          if (op[op[i][j]][k] != op[i][op[j][k]]) {
            violation(axiom, {i, j, k});
            return;
          }
  };

  first_noncommutative(add, "add-commutativity");
  first_nonassociative(add, "add-associativity");
  for (int i = 0; i < n; ++i)
    if (add[zero][i] != i) {
      violation("additive-identity", {i});
      break;
    }
  first_noncommutative(mul, "mul-commutativity");
  first_nonassociative(mul, "mul-associativity");
  for (int i = 0; i < n; ++i)
    if (mul[zero][i] != zero) {
      violation("annihilation", {i});
      break;
    }
  [&] {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          if (mul[add[i][j]][k] != add[mul[i][k]][mul[j][k]]) {
            violation("distributivity", {i, j, k});
            return;
          }
  }();
  return report;
}

/// Validates and builds. The zero is permuted to index 0; everything else
/// keeps its declared relative order.
inline FiniteSemiring make_semiring(const RawTables& raw) {
  AxiomReport report = verify_axioms(raw);
  if (!report.valid) {
    const auto& v = report.violations.front();
    std::string at = "(";
    for (std::size_t k = 0; k < v.witness.size(); ++k)
      at += (k ? "," : "") + raw.elements[v.witness[k]];
    at += ")";
    throw axiom_error(report, "semiring '" + raw.name + "': axiom " + v.axiom +
                                  " violated at " + at);
  }

  auto t = detail::resolve_tables(raw);
  FiniteSemiring s;
  s.name = raw.name;
  s.n = t.n;
  s.zero = 0;

  // perm[internal] = declared index
  std::vector<int> perm;
  perm.reserve(t.n);
  perm.push_back(t.zero);
  for (int i = 0; i < t.n; ++i)
    if (i != t.zero) perm.push_back(i);
  std::vector<int> inv(t.n);
  for (int i = 0; i < t.n; ++i) inv[perm[i]] = i;

  s.declared_index = perm;
  s.elem_names.resize(t.n);
  s.add.assign(t.n, std::vector<int>(t.n));
  s.mul.assign(t.n, std::vector<int>(t.n));
  for (int i = 0; i < t.n; ++i) {
    s.elem_names[i] = raw.elements[perm[i]];
    for (int j = 0; j < t.n; ++j) {
      s.add[i][j] = inv[t.add[perm[i]][perm[j]]];
      s.mul[i][j] = inv[t.mul[perm[i]][perm[j]]];
    }
  }
  return s;
}

/// The unit element, if any. Unique by commutativity.
inline std::optional<int> is_unitary(const FiniteSemiring& s) {
  for (int e = 0; e < s.n; ++e) {
    bool unit = true;
    for (int x = 0; x < s.n; ++x)
      if (s.mul[e][x] != x) {
        unit = false;
        break;
      }
    if (unit) return e;
  }
  return std::nullopt;
}

/// xx = x for every element.
inline bool is_idempotent(const FiniteSemiring& s) {
  for (int x = 0; x < s.n; ++x)
    if (s.mul[x][x] != x) return false;
  return true;
}

/// Direct product with componentwise operations. Element (a,b) gets index
/// a*right.n + b and name "(a|b)".
struct ProductSemiring {
  FiniteSemiring base;
  FiniteSemiring left;
  FiniteSemiring right;

  std::pair<int, int> pair_of(int k) const { return {k / right.n, k % right.n}; }
  int index_of(int l, int r) const { return l * right.n + r; }
};

inline ProductSemiring direct_product(const FiniteSemiring& s1,
                                      const FiniteSemiring& s2) {
  if (s1.n * s2.n > FiniteSemiring::max_elements)
    throw capacity_error("product " + s1.name + " x " + s2.name + " has " +
                         std::to_string(s1.n * s2.n) + " elements, cap is " +
                         std::to_string(FiniteSemiring::max_elements));
  ProductSemiring p;
  p.left = s1;
  p.right = s2;
  FiniteSemiring& b = p.base;
  b.name = s1.name + "x" + s2.name;
  b.n = s1.n * s2.n;
  b.zero = 0;
  b.elem_names.resize(b.n);
  b.declared_index.resize(b.n);
  b.add.assign(b.n, std::vector<int>(b.n));
  b.mul.assign(b.n, std::vector<int>(b.n));
  for (int k = 0; k < b.n; ++k) {
    auto [a, c] = p.pair_of(k);
    b.elem_names[k] = "(" + s1.elem_names[a] + "|" + s2.elem_names[c] + ")";
    b.declared_index[k] = k;
  }
  for (int i = 0; i < b.n; ++i) {
    auto [a, c] = p.pair_of(i);
    for (int j = 0; j < b.n; ++j) {
      auto [d, e] = p.pair_of(j);
      b.add[i][j] = p.index_of(s1.add[a][d], s2.add[c][e]);
      b.mul[i][j] = p.index_of(s1.mul[a][d], s2.mul[c][e]);
    }
  }
  return p;
}

namespace detail {

inline RawTables raw_from_index_tables(std::string name,
                                       std::vector<std::string> names,
                                       const std::vector<std::vector<int>>& add,
                                       const std::vector<std::vector<int>>& mul) {
  RawTables raw;
  raw.name = std::move(name);
  raw.elements = std::move(names);
  raw.zero = raw.elements[0];
  auto lift = [&](const std::vector<std::vector<int>>& t) {
    std::vector<std::vector<std::string>> out;
    out.reserve(t.size());
    for (const auto& row : t) {
      std::vector<std::string> r;
      r.reserve(row.size());
      for (int v : row) r.push_back(raw.elements[v]);
      out.push_back(std::move(r));
    }
    return out;
  };
  raw.add = lift(add);
  raw.mul = lift(mul);
  return raw;
}

inline RawTables chain_lattice_raw(const std::string& name,
                                   std::vector<std::string> names) {
  int n = static_cast<int>(names.size());
  std::vector<std::vector<int>> add(n, std::vector<int>(n));
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      add[i][j] = i > j ? i : j; // join
      mul[i][j] = i < j ? i : j; // meet
    }
  return raw_from_index_tables(name, std::move(names), add, mul);
}

inline RawTables zero_mul_raw(const std::string& name,
                              std::vector<std::string> names,
                              const std::vector<std::vector<int>>& add) {
  int n = static_cast<int>(names.size());
  std::vector<std::vector<int>> mul(n, std::vector<int>(n, 0));
  return raw_from_index_tables(name, std::move(names), add, mul);
}

inline RawTables modular_field_raw(const std::string& name, int p) {
  std::vector<std::string> names;
  for (int i = 0; i < p; ++i) names.push_back(std::to_string(i));
  std::vector<std::vector<int>> add(p, std::vector<int>(p));
  std::vector<std::vector<int>> mul(p, std::vector<int>(p));
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) {
      add[i][j] = (i + j) % p;
      mul[i][j] = (i * j) % p;
    }
  return raw_from_index_tables(name, std::move(names), add, mul);
}

} // namespace detail

inline const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = {"R2", "R4", "D2", "D3",
                                                 "S8", "Z2F", "Z3F"};
  return names;
}

/// Catalog of the stock algebras:
///   R2  - two-element zero-ring (add = Z2, all products 0)
///   R4  - zero-ring on the Klein four-group
///   D2  - two-element chain as a lattice semiring
///   D3  - three-element chain 0 < a < 1
///   S8  - eight-element commutative zero-semiring (cyclic-4 x join-2 monoid)
///   Z2F - field of order 2
///   Z3F - field of order 3
inline FiniteSemiring builtin(const std::string& name) {
  if (name == "R2")
    return make_semiring(detail::zero_mul_raw("R2", {"0", "1"}, {{0, 1}, {1, 0}}));
  if (name == "R4")
    return make_semiring(detail::zero_mul_raw(
        "R4", {"0", "a", "b", "c"},
        {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}));
  if (name == "D2")
    return make_semiring(detail::chain_lattice_raw("D2", {"0", "1"}));
  if (name == "D3")
    return make_semiring(detail::chain_lattice_raw("D3", {"0", "a", "1"}));
  if (name == "S8")
    return make_semiring(detail::zero_mul_raw(
        "S8", {"0", "a", "b", "c", "d", "e", "f", "g"},
        {{0, 1, 2, 3, 4, 5, 6, 7},
         {1, 2, 3, 0, 5, 6, 7, 4},
         {2, 3, 0, 1, 6, 7, 4, 5},
         {3, 0, 1, 2, 7, 4, 5, 6},
         {4, 5, 6, 7, 4, 5, 6, 7},
         {5, 6, 7, 4, 5, 6, 7, 4},
         {6, 7, 4, 5, 6, 7, 4, 5},
         {7, 4, 5, 6, 7, 4, 5, 6}}));
  if (name == "Z2F") return make_semiring(detail::modular_field_raw("Z2F", 2));
  if (name == "Z3F") return make_semiring(detail::modular_field_raw("Z3F", 3));
  throw format_error("unknown builtin semiring '" + name + "'");
}

/// Renders a subset as a brace-set of element names, members in index order.
inline std::string set_to_string(const FiniteSemiring& s, ElemSet set) {
  std::string out = "{";
  bool first = true;
  set.for_each([&](int e) {
    if (!first) out += ",";
    first = false;
    out += s.elem_names[e];
  });
  out += "}";
  return out;
}

} // namespace semiring_lab
