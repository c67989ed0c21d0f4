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

// Acceptance suite: every reproduction target is exact (finite mathematics,
// no tolerances). One line per criterion; a non-zero exit counts failures.

#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "semiring_lab/cli.hpp"
#include "semiring_lab/congruences.hpp"
#include "semiring_lab/lattice.hpp"
#include "semiring_lab/malcev.hpp"
#include "semiring_lab/numeric.hpp"
#include "semiring_lab/products.hpp"

using namespace semiring_lab;

namespace {

class Check {
public:
  void require(bool condition, const std::string& what) {
    if (!condition) failures_.push_back(what);
  }
  const std::vector<std::string>& failures() const { return failures_; }

private:
  std::vector<std::string> failures_;
};

ElemSet set_of(const FiniteSemiring& s, const std::vector<std::string>& names) {
  ElemSet out;
  for (const std::string& name : names) {
    auto idx = s.index_of(name);
    if (!idx) throw std::runtime_error("no element named " + name);
    out.add(*idx);
  }
  return out;
}

ProductSemiring make(const std::string& a, const std::string& b) {
  return direct_product(builtin(a), builtin(b));
}

// ---- criterion 1: Fig. 1 ------------------------------------------------

void criterion_fig1(Check& t) {
  FiniteSemiring s8 = builtin("S8");
  std::vector<ElemSet> ideals = enumerate_ideals(s8);
  std::vector<std::string> names;
  for (ElemSet ideal : ideals) names.push_back(set_to_string(s8, ideal));
  const std::vector<std::string> expected = {
      "{0}",         "{0,b}",         "{0,d}",
      "{0,d,f}",     "{0,a,b,c}",     "{0,b,d,f}",
      "{0,d,e,f,g}", "{0,b,d,e,f,g}", "{0,a,b,c,d,e,f,g}"};
  t.require(names == expected, "the nine ideal name-sets");

  FiniteLattice lat = ideal_lattice(s8, ideals);
  std::set<std::pair<std::string, std::string>> edges;
  for (auto [lo, hi] : lat.hasse) edges.insert({lat.labels[lo], lat.labels[hi]});
  const std::set<std::pair<std::string, std::string>> figure = {
      {"{0}", "{0,b}"},
      {"{0}", "{0,d}"},
      {"{0,b}", "{0,a,b,c}"},
      {"{0,b}", "{0,b,d,f}"},
      {"{0,d}", "{0,d,f}"},
      {"{0,d,f}", "{0,b,d,f}"},
      {"{0,d,f}", "{0,d,e,f,g}"},
      {"{0,a,b,c}", "{0,a,b,c,d,e,f,g}"},
      {"{0,b,d,f}", "{0,b,d,e,f,g}"},
      {"{0,d,e,f,g}", "{0,b,d,e,f,g}"},
      {"{0,b,d,e,f,g}", "{0,a,b,c,d,e,f,g}"}};
  t.require(edges == figure, "the Hasse edge set drawn in the figure");

  LawCheck mod = is_modular(lat);
  t.require(!mod.holds, "modularity must fail");
  auto pent = find_pentagon(lat);
  t.require(pent.has_value(), "a pentagon witness must exist");
  if (pent) {
    t.require(lat.meet[pent->x][pent->z] == pent->bottom &&
                  lat.meet[pent->y][pent->z] == pent->bottom &&
                  lat.join[pent->x][pent->z] == pent->top &&
                  lat.join[pent->y][pent->z] == pent->top &&
                  lat.leq[pent->x][pent->y] && pent->x != pent->y,
              "pentagon witness must satisfy the N5 relations");
  }

  cli::CommandOutcome res = cli::dispatch({"ideals", "builtin:S8", "--lattice"});
  t.require(res.exit_code == 0, "CLI exit code");
  t.require(res.output.find("ideals: 9\n"
                            "  I0 {0}\n"
                            "  I1 {0,b}\n"
                            "  I2 {0,d}\n"
                            "  I3 {0,d,f}\n"
                            "  I4 {0,a,b,c}\n"
                            "  I5 {0,b,d,f}\n"
                            "  I6 {0,d,e,f,g}\n"
                            "  I7 {0,b,d,e,f,g}\n"
                            "  I8 {0,a,b,c,d,e,f,g}\n") != std::string::npos,
            "CLI emits the nine ideals verbatim");
  t.require(res.output.find("modular: false") != std::string::npos,
            "CLI reports non-modularity");
  t.require(res.output.find("pentagon: bottom=") != std::string::npos,
            "CLI prints a pentagon witness");
}

// ---- criterion 2: Fig. 2 ------------------------------------------------

void criterion_fig2(Check& t) {
  FiniteSemiring d3 = builtin("D3");
  std::vector<Congruence> cons = enumerate_congruences(d3);
  std::vector<std::string> names;
  for (const Congruence& c : cons) names.push_back(congruence_to_string(d3, c));
  t.require(names == std::vector<std::string>{"{0}|{a}|{1}", "{0,a}|{1}",
                                              "{0}|{a,1}", "{0,a,1}"},
            "Con D3 is exactly {Delta, Theta1, Theta2, nabla}");

  KernelFamily ker = enumerate_kernels(d3, cons);
  t.require(ker.kernels.size() == 3, "three kernels");
  t.require(ker.lattice.labels ==
                std::vector<std::string>{"{0}", "{0,a}", "{0,a,1}"},
            "kernels form the chain {0} < {0,a} < D3");
  t.require(ker.lattice.hasse ==
                std::vector<std::pair<int, int>>{{0, 1}, {1, 2}},
            "kernel lattice is a chain");

  auto failure = kernel_map_join_failure(d3);
  t.require(failure.has_value(), "a join failure must exist");
  if (failure) {
    t.require(failure->first == cons[1] && failure->second == cons[2],
              "the witness is (Theta1, Theta2)");
    ElemSet join_kernel =
        kernel(d3, congruence_join(d3, failure->first, failure->second));
    t.require(set_to_string(d3, join_kernel) == "{0,a,1}",
              "[0](Theta1 v Theta2) = D3");
    t.require(set_to_string(d3, kernel(d3, cons[1])) == "{0,a}",
              "[0]Theta1 = {0,a}, so the kernel map breaks the join");
  }

  cli::CommandOutcome cons_cli = cli::dispatch({"congruences", "builtin:D3"});
  t.require(cons_cli.output.find("congruences: 4\n"
                                 "  C0 {0}|{a}|{1}  kernel={0}\n"
                                 "  C1 {0,a}|{1}  kernel={0,a}\n"
                                 "  C2 {0}|{a,1}  kernel={0}\n"
                                 "  C3 {0,a,1}  kernel={0,a,1}\n") !=
                std::string::npos,
            "CLI emits Con D3 verbatim");

  cli::CommandOutcome res = cli::dispatch({"kernels", "builtin:D3"});
  t.require(res.output.find("Theta={0,a}|{1} Phi={0}|{a,1}") != std::string::npos,
            "CLI prints the witness pair");
}

// ---- criterion 3: Example ex1 --------------------------------------------

void criterion_ex1(Check& t) {
  ProductSemiring p = make("R2", "D2");
  std::vector<ElemSet> ideals = enumerate_ideals(p.base);
  t.require(ideals.size() == 5, "Id(R2xD2) has five elements");

  FiniteLattice lat = ideal_lattice(p.base, ideals);
  auto pent = find_pentagon(lat);
  t.require(pent.has_value(), "the lattice is a pentagon");
  if (pent) {
    std::set<int> nodes = {pent->bottom, pent->top, pent->x, pent->y, pent->z};
    t.require(nodes.size() == 5, "the pentagon uses all five nodes");
  }

  std::vector<ElemSet> skew = skew_ideals(p);
  t.require(skew.size() == 1 &&
                set_to_string(p.base, skew[0]) == "{(0|0),(0|1),(1|1)}",
            "the unique skew ideal");
}

// ---- criterion 4: Example ex3 --------------------------------------------

void criterion_ex3(Check& t) {
  ProductSemiring p = make("R4", "D2");
  t.require(enumerate_ideals(p.base).size() == 17, "Id(R4xD2) has 17 elements");
  std::vector<std::string> skew;
  for (ElemSet ideal : skew_ideals(p)) skew.push_back(set_to_string(p.base, ideal));
  t.require(skew == std::vector<std::string>{
                        "{(0|0),(0|1),(a|1)}",
                        "{(0|0),(0|1),(b|1)}",
                        "{(0|0),(0|1),(c|1)}",
                        "{(0|0),(0|1),(a|1),(b|1),(c|1)}",
                        "{(0|0),(0|1),(a|0),(a|1),(b|1),(c|1)}",
                        "{(0|0),(0|1),(a|1),(b|0),(b|1),(c|1)}",
                        "{(0|0),(0|1),(a|1),(b|1),(c|0),(c|1)}"},
            "the seven listed skew ideals, exactly");
}

// ---- criterion 5: Theorem 1 chain ----------------------------------------

void criterion_theorem1(Check& t) {
  const std::pair<const char*, const char*> products[] = {
      {"R2", "D2"}, {"R4", "D2"}, {"D2", "D2"}, {"D2", "D3"}, {"S8", "Z2F"}};
  for (auto [a, b] : products) {
    ProductSemiring p = make(a, b);
    Theorem1Audit audit = audit_theorem1(p); // throws on any chain violation
    for (const auto& row : audit.rows) {
      bool i = row.conditions.at("T1.i"), ii = row.conditions.at("T1.ii"),
           iii = row.conditions.at("T1.iii"), iv = row.conditions.at("T1.iv");
      t.require(i == iii && (!i || iv) && (!iv || ii),
                std::string(p.base.name) + ": chain on row " + row.subject);
    }
    if (std::string(a) == "R4") {
      ElemSet separating = set_of(p.base, {"(0|0)", "(0|1)", "(a|1)"});
      bool found = false;
      for (std::size_t r : audit.strictness)
        if (audit.ideals[r] == separating) {
          found = true;
          t.require(audit.rows[r].conditions.at("T1.ii") &&
                        !audit.rows[r].conditions.at("T1.iii"),
                    "separating ideal has (ii) true and (iii) false");
        }
      t.require(found, "R4xD2 produces the strictness witness "
                       "{(0,0),(0,1),(a,1)}");
    }
  }
}

// ---- criterion 6: Theorems 2-4 -------------------------------------------

void criterion_kernel_theorems(Check& t) {
  const std::pair<const char*, const char*> products[] = {
      {"R2", "D2"}, {"R2", "R2"}, {"D2", "D2"}, {"D2", "D3"}, {"R4", "D2"}};
  for (auto [a, b] : products) {
    ProductSemiring p = make(a, b);
    std::vector<Congruence> cons = enumerate_congruences(p.base);

    if (p.base.n <= 6) { // cross-validate Con against the partition filter
      std::vector<std::vector<int>> expected = oracle::all_congruences(p.base);
      std::set<std::vector<int>> expected_set(expected.begin(), expected.end());
      bool same = cons.size() == expected.size();
      for (const Congruence& c : cons)
        same = same && expected_set.count(c.block_of) == 1;
      t.require(same, std::string(p.base.name) +
                          ": Con matches the Bell-number partition filter");
    }

    for (std::size_t i = 0; i < cons.size(); ++i) {
      const Congruence& theta = cons[i];
      std::string where = std::string(p.base.name) + " C" + std::to_string(i);
      bool strong_cond = kernel_strong_condition(p, theta).holds;
      bool strong_def = kernel_strong_by_factors(p, theta);
      t.require(strong_cond == strong_def, where + ": Theorem 2 biconditional");
      bool direct_cond = kernel_equ2_condition(p, theta).holds;
      bool direct_def = kernel_direct_by_projections(p, theta);
      t.require(direct_cond == direct_def, where + ": Theorem 3 biconditional");
      t.require(!theorem4_sufficient(p, theta) || strong_cond,
                where + ": Theorem 4 implies strong decomposability");
      t.require(!strong_cond || direct_cond, where + ": strong implies direct");
    }
  }
}

// ---- criterion 7: corollaries --------------------------------------------

void criterion_corollaries(Check& t) {
  const std::pair<const char*, const char*> no_skew[] = {
      {"D2", "D2"},  {"D2", "D3"},  {"Z2F", "Z2F"},
      {"Z2F", "D2"}, {"R2", "Z2F"}, {"S8", "Z2F"}};
  for (auto [a, b] : no_skew) {
    ProductSemiring p = make(a, b);
    t.require(skew_ideals(p).empty(),
              std::string(p.base.name) + " has no skew ideal");
  }
  t.require(enumerate_ideals(builtin("Z2F")).size() == 2, "Z2F has two ideals");
  t.require(enumerate_ideals(builtin("Z3F")).size() == 2, "Z3F has two ideals");
}

// ---- criterion 8: Mal'cev schemes ------------------------------------------

void criterion_malcev(Check& t) {
  std::vector<Term> dist0 = dist0_default_terms();
  t.require(verify_dist0_scheme(builtin("D2"), dist0).passed(), "dist0 on D2");
  t.require(verify_dist0_scheme(builtin("D3"), dist0).passed(), "dist0 on D3");

  SchemeReport r2 = verify_dist0_scheme(builtin("R2"), dist0);
  t.require(!r2.passed(), "dist0 fails on R2");
  bool witness_ok = false;
  for (const auto& id : r2.identities)
    if (id.name == "t1(x,x) = t2(x,x)" && !id.holds)
      witness_ok = id.witness == std::vector<int>{*builtin("R2").index_of("1")};
  t.require(witness_ok, "R2 failure witness is x=1");

  DdckTerms d = ddck_default_terms();
  t.require(verify_ddck_scheme(builtin("D2"), d.s, d.t, d.u).passed(), "ddck on D2");
  t.require(verify_ddck_scheme(builtin("D3"), d.s, d.t, d.u).passed(), "ddck on D3");
  t.require(verify_ddck_scheme(builtin("Z2F"), d.s, d.t, d.u).passed(),
            "ddck on Z2F");
  bool raised = false;
  try {
    verify_ddck_scheme(builtin("R2"), d.s, d.t, d.u);
  } catch (const signature_error&) {
    raised = true;
  }
  t.require(raised, "ddck on R2 raises a signature error");

  t.require(is_distributive_at_zero(builtin("D2")).holds,
            "D2 is distributive at 0");
  t.require(is_distributive_at_zero(builtin("D3")).holds,
            "D3 is distributive at 0");
}

// ---- criterion 9: numeric example ------------------------------------------

void criterion_numeric(Check& t) {
  NumericProduct ctx{2, 2};
  NumericPair gen{4, 6};
  t.require(!principal_membership(ctx, gen, {4, 0}), "(4,0) rejected");
  t.require(!principal_membership(ctx, gen, {0, 6}), "(0,6) rejected");
  bool all_agree = true;
  for (std::int64_t q1 = 0; q1 <= 240 && all_agree; q1 += 2)
    for (std::int64_t q2 = 0; q2 <= 240; q2 += 2)
      if (principal_membership(ctx, gen, {q1, q2}) !=
          closed_form_membership(ctx, {q1, q2})) {
        all_agree = false;
        break;
      }
  t.require(all_agree, "bounded search equals the closed form up to 240");
}

// ---- criterion 10: oracle equivalences -------------------------------------

void criterion_oracles(Check& t) {
  std::vector<FiniteSemiring> algebras;
  for (const std::string& name : builtin_names()) algebras.push_back(builtin(name));
  for (const std::string& a : builtin_names())
    for (const std::string& b : builtin_names()) {
      ProductSemiring p = make(a, b);
      if (p.base.n <= 16) algebras.push_back(p.base);
    }

  for (const FiniteSemiring& s : algebras) {
    if (s.n <= 16) {
      std::vector<std::uint64_t> expected = oracle::all_ideals(s);
      std::vector<ElemSet> actual = enumerate_ideals(s);
      std::set<std::uint64_t> expected_set(expected.begin(), expected.end());
      bool same = actual.size() == expected.size();
      for (ElemSet ideal : actual) same = same && expected_set.count(ideal.bits);
      t.require(same, s.name + ": ideals match the power-set filter");
    }
    if (s.n <= 8) {
      std::vector<std::vector<int>> expected = oracle::all_congruences(s);
      std::vector<Congruence> actual = enumerate_congruences(s);
      std::set<std::vector<int>> expected_set(expected.begin(), expected.end());
      bool same = actual.size() == expected.size();
      for (const Congruence& c : actual)
        same = same && expected_set.count(c.block_of);
      t.require(same, s.name + ": congruences match the partition filter");
    }
  }
}

struct Criterion {
  int id;
  std::string title;
  std::function<void(Check&)> body;
};

} // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "Fig. 1: S8 ideal lattice, edges, non-modularity", criterion_fig1},
      {2, "Fig. 2: Con D3, kernel chain, kernel-map join failure", criterion_fig2},
      {3, "Example ex1: Id(R2xD2) is N5 with one skew ideal", criterion_ex1},
      {4, "Example ex3: Id(R4xD2) and its seven skew ideals", criterion_ex3},
      {5, "Theorem 1 chain over five products", criterion_theorem1},
      {6, "Theorems 2-4 over all congruences of five products",
       criterion_kernel_theorems},
      {7, "Corollaries: no skew ideals, fields have two ideals",
       criterion_corollaries},
      {8, "Mal'cev schemes: dist0 and ddck verdicts", criterion_malcev},
      {9, "Numeric I(4,6): rejections and closed form", criterion_numeric},
      {10, "Oracle equivalences for ideals and congruences", criterion_oracles},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    Check check;
    std::string crash;
    try {
      c.body(check);
    } catch (const std::exception& e) {
      crash = e.what();
    }
    bool ok = crash.empty() && check.failures().empty();
    std::cout << "criterion " << c.id << (c.id < 10 ? "  " : " ")
              << (ok ? "[PASS] " : "[FAIL] ") << c.title << "\n";
    if (!ok) {
      ++failed;
      if (!crash.empty()) std::cout << "    exception: " << crash << "\n";
      for (const std::string& f : check.failures())
        std::cout << "    " << f << "\n";
    }
  }
  if (failed == 0)
    std::cout << "all 10 acceptance criteria passed\n";
  else
    std::cout << failed << " acceptance criteria FAILED\n";
  return failed;
}
