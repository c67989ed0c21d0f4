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

#include <cctype>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "semiring_lab/detail/parallel.hpp"
#include "semiring_lab/semiring.hpp"

namespace semiring_lab {

/// Immutable expression tree over {+, *, 0, 1, variables}. Variables are
/// 1-based; whether a tree mentions the constant 1 is cached so evaluation
/// on a unitless semiring can be rejected up front.
class Term {
public:
  enum class Kind { var, zero, one, plus, times };

  static Term var(int index) {
    if (index < 1) throw format_error("variable index must be >= 1");
    return Term(std::make_shared<Node>(Node{Kind::var, index, nullptr, nullptr}));
  }
  static Term zero() {
    return Term(std::make_shared<Node>(Node{Kind::zero, 0, nullptr, nullptr}));
  }
  static Term one() {
    return Term(std::make_shared<Node>(Node{Kind::one, 0, nullptr, nullptr}));
  }
  static Term plus(Term l, Term r) {
    return Term(std::make_shared<Node>(
        Node{Kind::plus, 0, std::move(l.root_), std::move(r.root_)}));
  }
  static Term times(Term l, Term r) {
    return Term(std::make_shared<Node>(
        Node{Kind::times, 0, std::move(l.root_), std::move(r.root_)}));
  }

  int max_var() const { return max_var(root_.get()); }
  bool uses_one() const { return uses_one(root_.get()); }

  /// Bottom-up evaluation. `unit` is the semiring's unit if any; evaluating
  /// a tree with a one-node and no unit raises signature_error.
  int eval(const FiniteSemiring& s, std::optional<int> unit,
           std::span<const int> assignment) const {
    return eval(root_.get(), s, unit, assignment);
  }

  /// Replaces variable k by replacements[k-1]; every variable must be
  /// covered.
  Term substitute(const std::vector<Term>& replacements) const {
    return Term(substitute(root_.get(), replacements));
  }

  std::string to_string() const { return to_string(root_.get(), false); }

private:
  struct Node {
    Kind kind;
    int var_index;
    std::shared_ptr<const Node> left, right;
  };

  explicit Term(std::shared_ptr<const Node> root) : root_(std::move(root)) {}

  static int max_var(const Node* n) {
    switch (n->kind) {
      case Kind::var: return n->var_index;
      case Kind::zero:
      case Kind::one: return 0;
      default:
        return std::max(max_var(n->left.get()), max_var(n->right.get()));
    }
  }
  static bool uses_one(const Node* n) {
    switch (n->kind) {
      case Kind::one: return true;
      case Kind::var:
      case Kind::zero: return false;
      default: return uses_one(n->left.get()) || uses_one(n->right.get());
    }
  }
  static int eval(const Node* n, const FiniteSemiring& s, std::optional<int> unit,
                  std::span<const int> assignment) {
    switch (n->kind) {
      case Kind::var: {
        int k = n->var_index;
        if (k > static_cast<int>(assignment.size()))
          throw format_error("assignment does not cover variable x" +
                             std::to_string(k));
        return assignment[k - 1];
      }
      case Kind::zero: return s.zero;
      case Kind::one:
        if (!unit)
          throw signature_error("term mentions the constant 1 but semiring '" +
                                s.name + "' has no unit");
        return *unit;
      case Kind::plus:
        return s.add[eval(n->left.get(), s, unit, assignment)]
                    [eval(n->right.get(), s, unit, assignment)];
      case Kind::times:
        return s.mul[eval(n->left.get(), s, unit, assignment)]
                    [eval(n->right.get(), s, unit, assignment)];
    }
    throw internal_error("corrupt term node");
  }
  static std::shared_ptr<const Node> substitute(
      const Node* n, const std::vector<Term>& replacements) {
    switch (n->kind) {
      case Kind::var: {
        int k = n->var_index;
        if (k > static_cast<int>(replacements.size()))
          throw format_error("substitution does not cover variable x" +
                             std::to_string(k));
        return replacements[k - 1].root_;
      }
      case Kind::zero:
      case Kind::one:
        return std::make_shared<Node>(Node{n->kind, 0, nullptr, nullptr});
      default:
        return std::make_shared<Node>(
            Node{n->kind, 0, substitute(n->left.get(), replacements),
                 substitute(n->right.get(), replacements)});
    }
  }
  static std::string to_string(const Node* n, bool parenthesize_sum) {
    switch (n->kind) {
      case Kind::var: {
        static const char* alias[] = {"x", "y", "z", "u", "v"};
        if (n->var_index <= 5) return alias[n->var_index - 1];
        return "x" + std::to_string(n->var_index);
      }
      case Kind::zero: return "0";
      case Kind::one: return "1";
      case Kind::plus: {
        std::string s = to_string(n->left.get(), false) + "+" +
                        to_string(n->right.get(), false);
        return parenthesize_sum ? "(" + s + ")" : s;
      }
      case Kind::times:
        return to_string(n->left.get(), true) + "*" +
               to_string(n->right.get(), true);
    }
    return "?";
  }

  std::shared_ptr<const Node> root_;
};

namespace detail {

/// Recursive-descent parser for the term syntax: variables x1..xk with
/// aliases x,y,z,u,v; constants 0 and 1; +, * and parentheses; adjacency
/// multiplies, so "xy" reads as x*y.
class TermParser {
public:
  explicit TermParser(std::string_view text) : text_(text) {}

  Term parse() {
    Term t = sum();
    skip_space();
    if (pos_ != text_.size())
      throw format_error("unexpected '" + std::string(1, text_[pos_]) +
                         "' at position " + std::to_string(pos_) + " in term '" +
                         std::string(text_) + "'");
    return t;
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0;

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }
  bool starts_factor() {
    skip_space();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return c == '(' || c == '0' || c == '1' || c == 'x' || c == 'y' || c == 'z' ||
           c == 'u' || c == 'v';
  }
  Term sum() {
    Term t = product();
    for (;;) {
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '+') {
        ++pos_;
        t = Term::plus(std::move(t), product());
      } else {
        return t;
      }
    }
  }
  Term product() {
    Term t = factor();
    for (;;) {
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        t = Term::times(std::move(t), factor());
      } else if (starts_factor()) {
        t = Term::times(std::move(t), factor());
      } else {
        return t;
      }
    }
  }
  Term factor() {
    skip_space();
    if (pos_ >= text_.size())
      throw format_error("term '" + std::string(text_) + "' ends unexpectedly");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Term t = sum();
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] != ')')
        throw format_error("missing ')' in term '" + std::string(text_) + "'");
      ++pos_;
      return t;
    }
    if (c == '0') {
      ++pos_;
      return Term::zero();
    }
    if (c == '1') {
      ++pos_;
      return Term::one();
    }
    if (c == 'x') {
      ++pos_;
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      if (pos_ > start)
        return Term::var(std::stoi(std::string(text_.substr(start, pos_ - start))));
      return Term::var(1);
    }
    if (c == 'y' || c == 'z' || c == 'u' || c == 'v') {
      ++pos_;
      static const std::string order = "yzuv";
      return Term::var(static_cast<int>(order.find(c)) + 2);
    }
    throw format_error("unexpected '" + std::string(1, c) + "' in term '" +
                       std::string(text_) + "'");
  }
};

} // namespace detail

inline Term parse_term(std::string_view text) {
  return detail::TermParser(text).parse();
}

/// Outcome of one identity check; the witness is the least failing
/// assignment in lexicographic order (x1 most significant).
struct IdentityCheck {
  bool holds = true;
  std::vector<int> witness;

  explicit operator bool() const { return holds; }
};

/// Exhaustive check of lhs ~ rhs over all n^arity assignments.
inline IdentityCheck check_identity(const FiniteSemiring& s, const Term& lhs,
                                    const Term& rhs, int arity) {
  if (lhs.max_var() > arity || rhs.max_var() > arity)
    throw format_error("identity mentions a variable beyond its arity");
  std::optional<int> unit = is_unitary(s);
  if ((lhs.uses_one() || rhs.uses_one()) && !unit)
    throw signature_error("identity mentions the constant 1 but semiring '" +
                          s.name + "' has no unit");

  long long total = 1;
  for (int i = 0; i < arity; ++i) total *= s.n;

  auto assignment_at = [&](long long index) {
    std::vector<int> a(arity);
    for (int v = arity - 1; v >= 0; --v) {
      a[v] = static_cast<int>(index % s.n);
      index /= s.n;
    }
    return a;
  };

  // Chunked scan; the reported witness is the global least failing index,
  // so the result does not depend on the worker count.
  constexpr long long chunk_size = 4096;
  long long chunks = (total + chunk_size - 1) / chunk_size;
  std::vector<long long> first_failure(static_cast<std::size_t>(chunks), -1);
  detail::parallel_for(static_cast<int>(chunks), [&](int c) {
    long long lo = c * chunk_size;
    long long hi = std::min(total, lo + chunk_size);
    for (long long i = lo; i < hi; ++i) {
      std::vector<int> a = assignment_at(i);
      if (lhs.eval(s, unit, a) != rhs.eval(s, unit, a)) {
        first_failure[c] = i;
        return;
      }
    }
  });
  for (long long f : first_failure)
    if (f >= 0) return {false, assignment_at(f)};
  return {};
}

struct IdentityResult {
  std::string name;
  bool holds = true;
  std::vector<int> witness;
};

struct SchemeReport {
  std::string scheme;
  std::vector<IdentityResult> identities;

  bool passed() const {
    for (const auto& r : identities)
      if (!r.holds) return false;
    return true;
  }
};

namespace detail {

inline IdentityResult run_identity(const FiniteSemiring& s, std::string name,
                                   const Term& lhs, const Term& rhs) {
  int arity = std::max(lhs.max_var(), rhs.max_var());
  IdentityCheck check = check_identity(s, lhs, rhs, arity);
  return {std::move(name), check.holds, check.witness};
}

} // namespace detail

/// Identity scheme characterizing distributivity at 0: given binary terms
/// t0..tn, checks
///   t0(x,y) = 0,   ti(0,y) = 0,
///   ti(x,0) = t(i+1)(x,0) for even i,   ti(x,x) = t(i+1)(x,x) for odd i,
///   tn(x,y) = x.
inline SchemeReport verify_dist0_scheme(const FiniteSemiring& s,
                                        const std::vector<Term>& ts) {
  if (ts.size() < 2)
    throw format_error("dist0 scheme needs at least two binary terms");
  const int n = static_cast<int>(ts.size()) - 1;
  const Term x = Term::var(1);
  const Term zero = Term::zero();
  const std::vector<Term> x_zero = {Term::var(1), Term::zero()};
  const std::vector<Term> zero_y = {Term::zero(), Term::var(2)};
  const std::vector<Term> x_x = {Term::var(1), Term::var(1)};

  SchemeReport report;
  report.scheme = "dist0";
  report.identities.push_back(detail::run_identity(s, "t0(x,y) = 0", ts[0], zero));
  for (int i = 0; i <= n; ++i)
    report.identities.push_back(detail::run_identity(
        s, "t" + std::to_string(i) + "(0,y) = 0", ts[i].substitute(zero_y), zero));
  for (int i = 0; i < n; i += 2)
    report.identities.push_back(detail::run_identity(
        s, "t" + std::to_string(i) + "(x,0) = t" + std::to_string(i + 1) + "(x,0)",
        ts[i].substitute(x_zero), ts[i + 1].substitute(x_zero)));
  for (int i = 1; i < n; i += 2)
    report.identities.push_back(detail::run_identity(
        s, "t" + std::to_string(i) + "(x,x) = t" + std::to_string(i + 1) + "(x,x)",
        ts[i].substitute(x_x), ts[i + 1].substitute(x_x)));
  report.identities.push_back(
      detail::run_identity(s, "t" + std::to_string(n) + "(x,y) = x", ts[n], x));
  return report;
}

/// Identity scheme for directly decomposable congruence kernels: binary
/// terms s1..sm, t1..tm and (m+2)-ary terms u1..un with
///   u1(x,y,s..) = x,  u1(y,x,t..) = x,
///   ui(y,x,s..) = u(i+1)(x,y,s..),  ui(x,y,t..) = u(i+1)(y,x,t..),
///   un(y,x,s..) = x,  un(x,y,t..) = y.
inline SchemeReport verify_ddck_scheme(const FiniteSemiring& alg,
                                       const std::vector<Term>& s_terms,
                                       const std::vector<Term>& t_terms,
                                       const std::vector<Term>& u_terms) {
  if (s_terms.empty() || u_terms.empty() || s_terms.size() != t_terms.size())
    throw format_error("ddck scheme needs m >= 1 pairs s/t and n >= 1 terms u");
  const int n = static_cast<int>(u_terms.size());
  const Term x = Term::var(1);
  const Term y = Term::var(2);

  auto plug = [&](const Term& u, bool swap_xy, const std::vector<Term>& binaries) {
    std::vector<Term> args = {swap_xy ? y : x, swap_xy ? x : y};
    for (const Term& b : binaries) args.push_back(b);
    return u.substitute(args);
  };

  SchemeReport report;
  report.scheme = "ddck";
  report.identities.push_back(detail::run_identity(
      alg, "u1(x,y,s..) = x", plug(u_terms[0], false, s_terms), x));
  report.identities.push_back(detail::run_identity(
      alg, "u1(y,x,t..) = x", plug(u_terms[0], true, t_terms), x));
  for (int i = 0; i + 1 < n; ++i) {
    report.identities.push_back(detail::run_identity(
        alg,
        "u" + std::to_string(i + 1) + "(y,x,s..) = u" + std::to_string(i + 2) +
            "(x,y,s..)",
        plug(u_terms[i], true, s_terms), plug(u_terms[i + 1], false, s_terms)));
    report.identities.push_back(detail::run_identity(
        alg,
        "u" + std::to_string(i + 1) + "(x,y,t..) = u" + std::to_string(i + 2) +
            "(y,x,t..)",
        plug(u_terms[i], false, t_terms), plug(u_terms[i + 1], true, t_terms)));
  }
  report.identities.push_back(detail::run_identity(
      alg, "u" + std::to_string(n) + "(y,x,s..) = x", plug(u_terms[n - 1], true, s_terms),
      x));
  report.identities.push_back(detail::run_identity(
      alg, "u" + std::to_string(n) + "(x,y,t..) = y", plug(u_terms[n - 1], false, t_terms),
      y));
  return report;
}

/// Witness terms from the idempotent case: (0, xy, x).
inline std::vector<Term> dist0_default_terms() {
  return {Term::zero(), Term::times(Term::var(1), Term::var(2)), Term::var(1)};
}

struct DdckTerms {
  std::vector<Term> s, t, u;
};

/// Witness terms from the unitary case: m=3, n=2 with s=(1,0,0), t=(0,1,y),
/// u1=xz+yu, u2=yz+v.
inline DdckTerms ddck_default_terms() {
  DdckTerms d;
  d.s = {Term::one(), Term::zero(), Term::zero()};
  d.t = {Term::zero(), Term::one(), Term::var(2)};
  d.u = {Term::plus(Term::times(Term::var(1), Term::var(3)),
                    Term::times(Term::var(2), Term::var(4))),
         Term::plus(Term::times(Term::var(2), Term::var(3)), Term::var(5))};
  return d;
}

} // namespace semiring_lab
