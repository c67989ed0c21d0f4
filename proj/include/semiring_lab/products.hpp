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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "semiring_lab/congruences.hpp"
#include "semiring_lab/detail/parallel.hpp"
#include "semiring_lab/ideals.hpp"
#include "semiring_lab/semiring.hpp"

namespace semiring_lab {

// ---------------------------------------------------------------------------
// Subset plumbing on a product universe
// ---------------------------------------------------------------------------

/// S1 x {0} as a subset of the product.
inline ElemSet axis_left(const ProductSemiring& p) {
  ElemSet out;
  for (int a = 0; a < p.left.n; ++a) out.add(p.index_of(a, p.right.zero));
  return out;
}

/// {0} x S2 as a subset of the product.
inline ElemSet axis_right(const ProductSemiring& p) {
  ElemSet out;
  for (int b = 0; b < p.right.n; ++b) out.add(p.index_of(p.left.zero, b));
  return out;
}

/// First projection of a product subset, as a subset of the left factor.
inline ElemSet project_left(const ProductSemiring& p, ElemSet set) {
  ElemSet out;
  set.for_each([&](int k) { out.add(p.pair_of(k).first); });
  return out;
}

inline ElemSet project_right(const ProductSemiring& p, ElemSet set) {
  ElemSet out;
  set.for_each([&](int k) { out.add(p.pair_of(k).second); });
  return out;
}

/// L x R assembled back into the product universe.
inline ElemSet box(const ProductSemiring& p, ElemSet left, ElemSet right) {
  ElemSet out;
  left.for_each(
      [&](int a) { right.for_each([&](int b) { out.add(p.index_of(a, b)); }); });
  return out;
}

// ---------------------------------------------------------------------------
// Ideal decomposability (Theorem 1)
// ---------------------------------------------------------------------------

/// Boolean verdict with the least witness (product element indices) when
/// false.
struct ConditionResult {
  bool holds = true;
  std::vector<int> witness;

  explicit operator bool() const { return holds; }
};

/// Condition (iii): every (a,b) in I keeps both axis shadows (a,0) and
/// (0,b) inside I.
inline ConditionResult t1_condition_iii(const ProductSemiring& p, ElemSet ideal) {
  ConditionResult res;
  ideal.for_each([&](int k) {
    if (!res.holds) return;
    auto [a, b] = p.pair_of(k);
    if (!ideal.has(p.index_of(a, p.right.zero)) ||
        !ideal.has(p.index_of(p.left.zero, b)))
      res = {false, {k}};
  });
  return res;
}

/// Condition (i): I is a box; returns its factors when it is.
inline std::optional<std::pair<ElemSet, ElemSet>>
t1_condition_i(const ProductSemiring& p, ElemSet ideal) {
  ElemSet left = project_left(p, ideal);
  ElemSet right = project_right(p, ideal);
  if (box(p, left, right) == ideal) return std::make_pair(left, right);
  return std::nullopt;
}

/// Condition (ii): (S1x{0}) n (({0}xS2)+I) and ((S1x{0})+I) n ({0}xS2) both
/// land inside I.
inline ConditionResult t1_condition_ii(const ProductSemiring& p, ElemSet ideal) {
  ElemSet a1 = axis_left(p);
  ElemSet a2 = axis_right(p);
  ElemSet first = (a1 & sum_set(p.base, a2, ideal)) - ideal;
  if (!first.is_empty()) return {false, {first.first()}};
  ElemSet second = (sum_set(p.base, a1, ideal) & a2) - ideal;
  if (!second.is_empty()) return {false, {second.first()}};
  return {};
}

/// Condition (iv): ((S1x{0})+I) n (({0}xS2)+I) = I.
inline ConditionResult t1_condition_iv(const ProductSemiring& p, ElemSet ideal) {
  ElemSet lhs = sum_set(p.base, axis_left(p), ideal) &
                sum_set(p.base, axis_right(p), ideal);
  if (lhs == ideal) return {};
  ElemSet diff = (lhs - ideal) | (ideal - lhs);
  return {false, {diff.first()}};
}

/// Ideals of the product that are not boxes, canonical order.
inline std::vector<ElemSet> skew_ideals(const ProductSemiring& p) {
  std::vector<ElemSet> out;
  for (ElemSet ideal : enumerate_ideals(p.base))
    if (!t1_condition_i(p, ideal)) out.push_back(ideal);
  return out;
}

/// One audited subject: which conditions hold, the explaining witness when
/// one fails, and the box factors when decomposable.
struct DecompositionVerdict {
  std::string subject;
  std::map<std::string, bool> conditions;
  std::optional<std::vector<int>> witness;
  std::optional<std::pair<ElemSet, ElemSet>> factors;
};

struct Theorem1Audit {
  std::vector<ElemSet> ideals;
  std::vector<DecompositionVerdict> rows;
  std::vector<std::size_t> strictness; // rows with (ii) true but (iii) false
};

/// Scores every ideal against (i)-(iv) and enforces the implication chain
/// (iii) <=> (i) => (iv) => (ii) row by row. A chain violation would refute
/// a proved theorem, so it raises internal_error.
inline Theorem1Audit audit_theorem1(const ProductSemiring& p) {
  Theorem1Audit audit;
  audit.ideals = enumerate_ideals(p.base);
  const int rows = static_cast<int>(audit.ideals.size());
  audit.rows.resize(rows);
  detail::parallel_for(rows, [&](int r) {
    ElemSet ideal = audit.ideals[r];
    DecompositionVerdict& v = audit.rows[r];
    v.subject = "I" + std::to_string(r);
    auto factors = t1_condition_i(p, ideal);
    ConditionResult ii = t1_condition_ii(p, ideal);
    ConditionResult iii = t1_condition_iii(p, ideal);
    ConditionResult iv = t1_condition_iv(p, ideal);
    v.conditions["T1.i"] = factors.has_value();
    v.conditions["T1.ii"] = ii.holds;
    v.conditions["T1.iii"] = iii.holds;
    v.conditions["T1.iv"] = iv.holds;
    if (factors) v.factors = *factors;
    if (!iii.holds)
      v.witness = iii.witness;
    else if (!iv.holds)
      v.witness = iv.witness;
    else if (!ii.holds)
      v.witness = ii.witness;
  });
  for (int r = 0; r < rows; ++r) {
    const auto& c = audit.rows[r].conditions;
    bool i = c.at("T1.i"), ii = c.at("T1.ii"), iii = c.at("T1.iii"),
         iv = c.at("T1.iv");
    if (i != iii || (i && !iv) || (iv && !ii))
      throw internal_error("Theorem 1 implication chain failed on ideal " +
                           set_to_string(p.base, audit.ideals[r]));
    if (ii && !iii) audit.strictness.push_back(static_cast<std::size_t>(r));
  }
  return audit;
}

// ---------------------------------------------------------------------------
// Sufficient conditions for ideal decomposability
// ---------------------------------------------------------------------------

enum class CorollaryCase { both_unitary, unitary_idempotent, both_idempotent };

inline const char* to_string(CorollaryCase c) {
  switch (c) {
    case CorollaryCase::both_unitary: return "both factors unitary";
    case CorollaryCase::unitary_idempotent: return "one factor unitary, the other idempotent";
    case CorollaryCase::both_idempotent: return "both factors idempotent";
  }
  return "?";
}

struct CorollaryResult {
  bool applicable = false;
  std::optional<CorollaryCase> hypothesis;
  bool all_decomposable = false;
};

/// When the factors satisfy one of the unitary/idempotent hypotheses, every
/// ideal of the product must be a box; verifies that by enumeration.
inline CorollaryResult corollary_decomposability_check(const ProductSemiring& p) {
  bool u1 = is_unitary(p.left).has_value();
  bool u2 = is_unitary(p.right).has_value();
  bool i1 = is_idempotent(p.left);
  bool i2 = is_idempotent(p.right);
  CorollaryResult res;
  if (u1 && u2)
    res.hypothesis = CorollaryCase::both_unitary;
  else if ((u1 && i2) || (i1 && u2))
    res.hypothesis = CorollaryCase::unitary_idempotent;
  else if (i1 && i2)
    res.hypothesis = CorollaryCase::both_idempotent;
  else
    return res; // inapplicable
  res.applicable = true;
  res.all_decomposable = skew_ideals(p).empty();
  return res;
}

/// A genuine field: additive inverses everywhere, a unit, and every nonzero
/// element multiplicatively invertible. Additive inverses matter — without
/// them D2 would qualify and the proposition below is false for it.
inline bool is_field(const FiniteSemiring& s) {
  auto unit = is_unitary(s);
  if (!unit || s.n < 2) return false;
  for (int x = 0; x < s.n; ++x) {
    bool negatable = false;
    for (int y = 0; y < s.n; ++y)
      if (s.add[x][y] == s.zero) {
        negatable = true;
        break;
      }
    if (!negatable) return false;
    if (x == s.zero) continue;
    bool invertible = false;
    for (int y = 0; y < s.n; ++y)
      if (s.mul[x][y] == *unit) {
        invertible = true;
        break;
      }
    if (!invertible) return false;
  }
  return true;
}

struct FieldPropositionResult {
  bool applicable = false;
  bool field_has_only_trivial_ideals = false;
  bool all_decomposable = false;
};

/// A field has no proper nonzero ideals, so every ideal of S x F must be a
/// box; verifies both statements by enumeration.
inline FieldPropositionResult field_proposition_check(const FiniteSemiring& s,
                                                      const FiniteSemiring& f) {
  FieldPropositionResult res;
  if (!is_field(f)) return res;
  res.applicable = true;
  res.field_has_only_trivial_ideals = enumerate_ideals(f).size() == 2;
  res.all_decomposable = skew_ideals(direct_product(s, f)).empty();
  return res;
}

// ---------------------------------------------------------------------------
// Kernel decomposability (Theorems 2-4)
// ---------------------------------------------------------------------------

/// The coordinate congruences Pi_i on the product (equal i-th coordinate)
/// and the projections theta_i of a congruence onto the factors.
struct ProjectionPair {
  Congruence pi1, pi2;     // on the product
  Congruence theta1, theta2; // on the factors
};

inline Congruence coordinate_congruence(const ProductSemiring& p, int which) {
  std::vector<int> raw(p.base.n);
  for (int k = 0; k < p.base.n; ++k) {
    auto [a, b] = p.pair_of(k);
    raw[k] = which == 1 ? a : b;
  }
  return normalize_partition(raw);
}

namespace detail {

/// Projects a product congruence onto one factor. The projected pair set is
/// provably transitive for commutative semirings, so finding it
/// non-transitive means a bug, not a property of the input.
inline Congruence project_congruence(const ProductSemiring& p,
                                     const Congruence& theta, int which) {
  int n = which == 1 ? p.left.n : p.right.n;
  std::vector<std::vector<char>> rel(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i) rel[i][i] = 1;
  for (int x = 0; x < p.base.n; ++x)
    for (int y = x + 1; y < p.base.n; ++y) {
      if (!theta.same(x, y)) continue;
      int px = which == 1 ? p.pair_of(x).first : p.pair_of(x).second;
      int py = which == 1 ? p.pair_of(y).first : p.pair_of(y).second;
      rel[px][py] = rel[py][px] = 1;
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (rel[a][b] && rel[b][c] && !rel[a][c])
          throw internal_error("projected congruence is not transitive");
  std::vector<int> raw(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b <= a; ++b)
      if (rel[a][b]) {
        raw[a] = b; // least related element
        break;
      }
  return normalize_partition(raw);
}

} // namespace detail

inline ProjectionPair projection_pair(const ProductSemiring& p,
                                      const Congruence& theta) {
  ProjectionPair pp;
  pp.pi1 = coordinate_congruence(p, 1);
  pp.pi2 = coordinate_congruence(p, 2);
  pp.theta1 = detail::project_congruence(p, theta, 1);
  pp.theta2 = detail::project_congruence(p, theta, 2);
  return pp;
}

/// Theorem 3 test condition on the kernel K = [(0,0)]Theta:
/// (a,b),(c,d) in K implies (a,d) in K. Witness is the least such pair.
inline ConditionResult kernel_equ2_condition(const ProductSemiring& p,
                                             const Congruence& theta) {
  ElemSet k = kernel(p.base, theta);
  ConditionResult res;
  k.for_each([&](int u) {
    if (!res.holds) return;
    k.for_each([&](int v) {
      if (!res.holds) return;
      int mixed = p.index_of(p.pair_of(u).first, p.pair_of(v).second);
      if (!k.has(mixed)) res = {false, {u, v}};
    });
  });
  return res;
}

/// Direct decomposability by its definition: K equals the box of its own
/// projections.
inline bool kernel_direct_by_projections(const ProductSemiring& p,
                                         const Congruence& theta) {
  ElemSet k = kernel(p.base, theta);
  return box(p, project_left(p, k), project_right(p, k)) == k;
}

/// Theorem 2 test condition: (a,b) T (0,c) and (d,e) T (f,0) force
/// (a,e) T (0,0). Witness is the least offending quadruple (u,w,v,z).
inline ConditionResult kernel_strong_condition(const ProductSemiring& p,
                                               const Congruence& theta) {
  for (int u = 0; u < p.base.n; ++u)
    for (int w = 0; w < p.base.n; ++w) {
      if (p.pair_of(w).first != p.left.zero) continue;
      if (!theta.same(u, w)) continue;
      for (int v = 0; v < p.base.n; ++v)
        for (int z = 0; z < p.base.n; ++z) {
          if (p.pair_of(z).second != p.right.zero) continue;
          if (!theta.same(v, z)) continue;
          int mixed = p.index_of(p.pair_of(u).first, p.pair_of(v).second);
          if (!theta.same(mixed, p.base.zero)) return {false, {u, w, v, z}};
        }
    }
  return {};
}

/// Strong decomposability by its definition: K equals [0]theta1 x [0]theta2.
inline bool kernel_strong_by_factors(const ProductSemiring& p,
                                     const Congruence& theta) {
  ProjectionPair pp = projection_pair(p, theta);
  ElemSet expected = box(p, kernel(p.left, pp.theta1), kernel(p.right, pp.theta2));
  return kernel(p.base, theta) == expected;
}

/// Theorem 3 verdict: checks the test condition and, as a bug trap, its
/// proved equivalence with the definition.
inline ConditionResult kernel_directly_decomposable(const ProductSemiring& p,
                                                    const Congruence& theta) {
  ConditionResult res = kernel_equ2_condition(p, theta);
  if (res.holds != kernel_direct_by_projections(p, theta))
    throw internal_error("Theorem 3 equivalence failed");
  return res;
}

/// Theorem 2 verdict, same structure.
inline ConditionResult kernel_strongly_decomposable(const ProductSemiring& p,
                                                    const Congruence& theta) {
  ConditionResult res = kernel_strong_condition(p, theta);
  if (res.holds != kernel_strong_by_factors(p, theta))
    throw internal_error("Theorem 2 equivalence failed");
  return res;
}

/// Theorem 4 hypothesis: [(0,0)]((Theta v Pi_1) ^ Pi_2) and the symmetric
/// set both sit inside [(0,0)]Theta.
inline bool theorem4_sufficient(const ProductSemiring& p, const Congruence& theta) {
  Congruence pi1 = coordinate_congruence(p, 1);
  Congruence pi2 = coordinate_congruence(p, 2);
  ElemSet k = kernel(p.base, theta);
  ElemSet lhs1 =
      kernel(p.base, partition_meet(congruence_join(p.base, theta, pi1), pi2));
  ElemSet lhs2 =
      kernel(p.base, partition_meet(congruence_join(p.base, theta, pi2), pi1));
  return lhs1.subset_of(k) && lhs2.subset_of(k);
}

/// Congruence product Theta1 x Theta2 on the product semiring.
inline Congruence product_congruence(const ProductSemiring& p,
                                     const Congruence& t1, const Congruence& t2) {
  std::vector<int> raw(p.base.n);
  for (int k = 0; k < p.base.n; ++k) {
    auto [a, b] = p.pair_of(k);
    raw[k] = t1.block_of[a] * p.right.n + t2.block_of[b];
  }
  Congruence c = normalize_partition(raw);
  if (!is_congruence(p.base, c))
    throw internal_error("product of congruences is not a congruence");
  return c;
}

/// Kernel decomposability audit over all congruences of the product.
struct KernelAudit {
  std::vector<Congruence> congruences;
  std::vector<DecompositionVerdict> rows;
};

inline KernelAudit audit_kernels(const ProductSemiring& p) {
  KernelAudit audit;
  audit.congruences = enumerate_congruences(p.base);
  const int rows = static_cast<int>(audit.congruences.size());
  audit.rows.resize(rows);
  detail::parallel_for(rows, [&](int r) {
    const Congruence& theta = audit.congruences[r];
    DecompositionVerdict& v = audit.rows[r];
    v.subject = "C" + std::to_string(r);
    ConditionResult strong = kernel_strongly_decomposable(p, theta);
    ConditionResult direct = kernel_directly_decomposable(p, theta);
    v.conditions["T2.strong"] = strong.holds;
    v.conditions["T3.direct"] = direct.holds;
    v.conditions["T4.sufficient"] = theorem4_sufficient(p, theta);
    if (!direct.holds)
      v.witness = direct.witness;
    else if (!strong.holds)
      v.witness = strong.witness;
    ElemSet k = kernel(p.base, theta);
    if (direct.holds)
      v.factors = std::make_pair(project_left(p, k), project_right(p, k));
  });
  for (const auto& v : audit.rows) {
    if (v.conditions.at("T4.sufficient") && !v.conditions.at("T2.strong"))
      throw internal_error("Theorem 4 implication failed on " + v.subject);
    if (v.conditions.at("T2.strong") && !v.conditions.at("T3.direct"))
      throw internal_error("strong decomposability did not imply direct "
                           "decomposability on " + v.subject);
  }
  return audit;
}

/// CSV rendering shared by ideal and kernel audits. Witness and factor
/// fields are quoted (set notation contains commas).
inline std::string audit_to_csv(const ProductSemiring& p,
                                const Theorem1Audit& ideals,
                                const KernelAudit& kernels) {
  static const char* columns[] = {"T1.i",      "T1.ii",    "T1.iii",       "T1.iv",
                                  "T2.strong", "T3.direct", "T4.sufficient"};
  std::string out = "subject";
  for (const char* c : columns) out += std::string(",") + c;
  out += ",witness,factors\n";
  auto emit = [&](const DecompositionVerdict& v) {
    out += v.subject;
    for (const char* c : columns) {
      auto it = v.conditions.find(c);
      out += ",";
      if (it != v.conditions.end()) out += it->second ? "true" : "false";
    }
    out += ",\"";
    if (v.witness)
      for (std::size_t i = 0; i < v.witness->size(); ++i)
        out += (i ? " " : "") + p.base.elem_names[(*v.witness)[i]];
    out += "\",\"";
    if (v.factors)
      out += set_to_string(p.left, v.factors->first) + "x" +
             set_to_string(p.right, v.factors->second);
    out += "\"\n";
  };
  for (const auto& v : ideals.rows) emit(v);
  for (const auto& v : kernels.rows) emit(v);
  return out;
}

} // namespace semiring_lab
