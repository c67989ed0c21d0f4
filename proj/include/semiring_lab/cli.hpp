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
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "semiring_lab/congruences.hpp"
#include "semiring_lab/io.hpp"
#include "semiring_lab/lattice.hpp"
#include "semiring_lab/malcev.hpp"
#include "semiring_lab/numeric.hpp"
#include "semiring_lab/products.hpp"

namespace semiring_lab::cli {

/// Exit code contract: 0 = success / property true, 1 = property false or
/// witness found, 2 = input error (bad command, unreadable file, invalid
/// algebra, signature error).
struct CommandOutcome {
  int exit_code = 0;
  std::string output;
  std::string diagnostics;
};

namespace detail_cli {

constexpr int schema_version = 1;

using ordered_json = nlohmann::ordered_json;

inline std::pair<std::int64_t, std::int64_t> parse_pair(const std::string& text,
                                                        const char* what) {
  auto comma = text.find(',');
  if (comma == std::string::npos)
    throw format_error(std::string(what) + " expects two comma-separated "
                                           "integers, got '" + text + "'");
  try {
    return {std::stoll(text.substr(0, comma)), std::stoll(text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw format_error(std::string(what) + " expects integers, got '" + text + "'");
  }
}

inline RawTables raw_of(const FiniteSemiring& s) {
  return semiring_lab::detail::raw_from_index_tables(s.name, s.elem_names, s.add,
                                                     s.mul);
}

inline std::string var_name(int index) {
  static const char* alias[] = {"x", "y", "z", "u", "v"};
  if (index <= 5) return alias[index - 1];
  return "x" + std::to_string(index);
}

inline std::string assignment_text(const FiniteSemiring& s,
                                   const std::vector<int>& witness) {
  std::string out;
  for (std::size_t i = 0; i < witness.size(); ++i) {
    if (i) out += " ";
    out += var_name(static_cast<int>(i) + 1) + "=" + s.elem_names[witness[i]];
  }
  return out;
}

inline ordered_json set_json(const FiniteSemiring& s, ElemSet set) {
  ordered_json arr = ordered_json::array();
  set.for_each([&](int e) { arr.push_back(s.elem_names[e]); });
  return arr;
}

inline ordered_json lattice_json(const FiniteLattice& lat) {
  ordered_json j;
  j["size"] = lat.size();
  ordered_json edges = ordered_json::array();
  for (auto [lo, hi] : lat.hasse) edges.push_back(ordered_json::array({lo, hi}));
  j["hasse"] = std::move(edges);
  LawCheck mod = is_modular(lat);
  LawCheck dist = is_distributive(lat);
  j["modular"] = mod.holds;
  j["distributive"] = dist.holds;
  auto pent = find_pentagon(lat);
  if (pent)
    j["pentagon"] = {{"bottom", pent->bottom},
                     {"top", pent->top},
                     {"x", pent->x},
                     {"y", pent->y},
                     {"z", pent->z}};
  else
    j["pentagon"] = nullptr;
  return j;
}

inline void print_lattice_report(std::ostream& out, const FiniteLattice& lat,
                                 const std::string& node_prefix) {
  out << "hasse edges: " << lat.hasse.size() << "\n";
  for (auto [lo, hi] : lat.hasse)
    out << "  " << node_prefix << lo << " -> " << node_prefix << hi << "\n";
  LawCheck mod = is_modular(lat);
  if (mod.holds) {
    out << "modular: true\n";
  } else {
    out << "modular: false  (witness a=" << node_prefix << mod.witness[0]
        << " b=" << node_prefix << mod.witness[1] << " x=" << node_prefix
        << mod.witness[2] << ")\n";
  }
  LawCheck dist = is_distributive(lat);
  if (dist.holds) {
    out << "distributive: true\n";
  } else {
    out << "distributive: false  (witness a=" << node_prefix << dist.witness[0]
        << " b=" << node_prefix << dist.witness[1] << " c=" << node_prefix
        << dist.witness[2] << ")\n";
  }
  auto pent = find_pentagon(lat);
  if (pent) {
    out << "pentagon: bottom=" << node_prefix << pent->bottom << " x="
        << node_prefix << pent->x << " y=" << node_prefix << pent->y << " z="
        << node_prefix << pent->z << " top=" << node_prefix << pent->top << "\n";
  } else {
    out << "pentagon: none\n";
  }
}

// -- check -------------------------------------------------------------

inline int cmd_check(const std::string& alg, bool json, std::ostream& out) {
  RawTables raw;
  if (alg.rfind("builtin:", 0) == 0)
    raw = raw_of(builtin(alg.substr(8)));
  else
    raw = parse_semiring_text(read_file(alg));
  AxiomReport report = verify_axioms(raw);

  std::optional<FiniteSemiring> s;
  if (report.valid) s = make_semiring(raw);

  if (json) {
    ordered_json j;
    j["schema_version"] = schema_version;
    j["command"] = "check";
    j["algebra"] = raw.name;
    j["elements"] = raw.elements.size();
    j["valid"] = report.valid;
    ordered_json violations = ordered_json::array();
    for (const auto& v : report.violations) {
      ordered_json w = ordered_json::array();
      for (int e : v.witness) w.push_back(raw.elements[e]);
      violations.push_back({{"axiom", v.axiom}, {"witness", std::move(w)}});
    }
    j["violations"] = std::move(violations);
    if (s) {
      auto unit = is_unitary(*s);
      j["unitary"] = unit ? ordered_json(s->elem_names[*unit]) : ordered_json(nullptr);
      j["idempotent"] = is_idempotent(*s);
    }
    out << j.dump(2) << "\n";
  } else {
    out << "algebra: " << raw.name << " (" << raw.elements.size()
        << " elements, zero=" << raw.zero << ")\n";
    if (report.valid) {
      out << "axioms: valid\n";
      auto unit = is_unitary(*s);
      out << "unitary: " << (unit ? "yes (unit=" + s->elem_names[*unit] + ")" : "no")
          << "\n";
      out << "idempotent: " << (is_idempotent(*s) ? "yes" : "no") << "\n";
    } else {
      out << "axioms: INVALID\n";
      for (const auto& v : report.violations) {
        out << "  " << v.axiom << " violated at (";
        for (std::size_t k = 0; k < v.witness.size(); ++k)
          out << (k ? "," : "") << raw.elements[v.witness[k]];
        out << ")\n";
      }
    }
  }
  return report.valid ? 0 : 2;
}

// -- ideals ------------------------------------------------------------

inline int cmd_ideals(const std::string& alg, bool with_lattice,
                      const std::string& dot_path, bool json, std::ostream& out) {
  FiniteSemiring s = load_algebra(alg);
  std::vector<ElemSet> ideals = enumerate_ideals(s);
  std::optional<FiniteLattice> lat;
  if (with_lattice || !dot_path.empty()) lat = ideal_lattice(s, ideals);
  if (!dot_path.empty()) write_file(dot_path, to_dot(*lat, "ideal_lattice"));

  if (json) {
    ordered_json j;
    j["schema_version"] = schema_version;
    j["command"] = "ideals";
    j["algebra"] = s.name;
    j["count"] = ideals.size();
    ordered_json list = ordered_json::array();
    for (ElemSet ideal : ideals) list.push_back(set_json(s, ideal));
    j["ideals"] = std::move(list);
    if (lat) j["lattice"] = lattice_json(*lat);
    out << j.dump(2) << "\n";
  } else {
    out << "algebra: " << s.name << " (" << s.n << " elements)\n";
    out << "ideals: " << ideals.size() << "\n";
    for (std::size_t i = 0; i < ideals.size(); ++i)
      out << "  I" << i << " " << set_to_string(s, ideals[i]) << "\n";
    if (lat) print_lattice_report(out, *lat, "I");
  }
  return 0;
}

// -- congruences -------------------------------------------------------

inline int cmd_congruences(const std::string& alg, bool json, std::ostream& out) {
  FiniteSemiring s = load_algebra(alg);
  std::vector<Congruence> cons = enumerate_congruences(s);
  if (json) {
    ordered_json j;
    j["schema_version"] = schema_version;
    j["command"] = "congruences";
    j["algebra"] = s.name;
    j["count"] = cons.size();
    ordered_json list = ordered_json::array();
    for (const Congruence& c : cons) {
      ordered_json blocks = ordered_json::array();
      for (int b = 0; b < c.block_count(); ++b)
        blocks.push_back(set_json(s, c.block_mask(b)));
      list.push_back(ordered_json{{"blocks", std::move(blocks)},
                                  {"kernel", set_json(s, kernel(s, c))}});
    }
    j["congruences"] = std::move(list);
    out << j.dump(2) << "\n";
  } else {
    out << "algebra: " << s.name << " (" << s.n << " elements)\n";
    out << "congruences: " << cons.size() << "\n";
    for (std::size_t i = 0; i < cons.size(); ++i)
      out << "  C" << i << " " << congruence_to_string(s, cons[i])
          << "  kernel=" << set_to_string(s, kernel(s, cons[i])) << "\n";
  }
  return 0;
}

// -- kernels -----------------------------------------------------------

inline int cmd_kernels(const std::string& alg, bool with_lattice, bool json,
                       std::ostream& out) {
  FiniteSemiring s = load_algebra(alg);
  std::vector<Congruence> cons = enumerate_congruences(s);
  KernelFamily family = enumerate_kernels(s, cons);
  auto failure = kernel_map_join_failure(s);

  if (json) {
    ordered_json j;
    j["schema_version"] = schema_version;
    j["command"] = "kernels";
    j["algebra"] = s.name;
    j["congruences"] = cons.size();
    j["count"] = family.kernels.size();
    ordered_json list = ordered_json::array();
    for (ElemSet k : family.kernels) list.push_back(set_json(s, k));
    j["kernels"] = std::move(list);
    if (failure) {
      ElemSet join_kernel = kernel(s, congruence_join(s, failure->first, failure->second));
      j["join_failure"] = {
          {"theta", congruence_to_string(s, failure->first)},
          {"phi", congruence_to_string(s, failure->second)},
          {"kernel_of_join", set_json(s, join_kernel)},
          {"join_of_kernels",
           set_json(s, semiring_lab::detail::closure_in_family(
                           family.kernels, kernel(s, failure->first) |
                                               kernel(s, failure->second)))}};
    } else {
      j["join_failure"] = nullptr;
    }
    if (with_lattice) j["lattice"] = lattice_json(family.lattice);
    out << j.dump(2) << "\n";
  } else {
    out << "algebra: " << s.name << " (" << s.n << " elements)\n";
    out << "congruences: " << cons.size() << "\n";
    out << "kernels: " << family.kernels.size() << "\n";
    for (std::size_t i = 0; i < family.kernels.size(); ++i)
      out << "  K" << i << " " << set_to_string(s, family.kernels[i]) << "\n";
    if (failure) {
      ElemSet join_kernel = kernel(s, congruence_join(s, failure->first, failure->second));
      ElemSet kernel_join = semiring_lab::detail::closure_in_family(
          family.kernels, kernel(s, failure->first) | kernel(s, failure->second));
      out << "kernel map join failure: yes\n";
      out << "  Theta=" << congruence_to_string(s, failure->first)
          << " Phi=" << congruence_to_string(s, failure->second) << "\n";
      out << "  [0](Theta v Phi) = " << set_to_string(s, join_kernel) << "\n";
      out << "  [0]Theta v [0]Phi = " << set_to_string(s, kernel_join)
          << " (kernel-lattice join)\n";
    } else {
      out << "kernel map join failure: none\n";
    }
    if (with_lattice) print_lattice_report(out, family.lattice, "K");
  }
  return 0;
}

// -- product -----------------------------------------------------------

inline int cmd_product(const std::string& alg1, const std::string& alg2,
                       const std::string& out_path, std::ostream& out) {
  ProductSemiring p = direct_product(load_algebra(alg1), load_algebra(alg2));
  std::string text = serialize_semiring(p.base);
  if (out_path.empty())
    out << text;
  else
    write_file(out_path, text);
  return 0;
}

// -- decompose ---------------------------------------------------------

inline int cmd_decompose_ideals(const ProductSemiring& p, bool json,
                                std::ostream& out) {
  std::vector<ElemSet> ideals = enumerate_ideals(p.base);
  std::vector<ElemSet> skew;
  std::vector<std::optional<std::pair<ElemSet, ElemSet>>> factors(ideals.size());
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    factors[i] = t1_condition_i(p, ideals[i]);
    if (!factors[i]) skew.push_back(ideals[i]);
  }

  if (json) {
    ordered_json j;
    j["schema_version"] = schema_version;
    j["command"] = "decompose-ideals";
    j["product"] = p.base.name;
    j["ideals"] = ideals.size();
    j["skew"] = skew.size();
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < ideals.size(); ++i) {
      ordered_json row;
      row["ideal"] = set_json(p.base, ideals[i]);
      if (factors[i]) {
        row["factors"] = ordered_json::array(
            {set_json(p.left, factors[i]->first), set_json(p.right, factors[i]->second)});
      } else {
        row["factors"] = nullptr;
      }
      rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    out << j.dump(2) << "\n";
  } else {
    out << "product: " << p.base.name << " (" << p.base.n << " elements)\n";
    out << ideals.size() << " ideals, " << skew.size() << " skew\n";
    for (std::size_t i = 0; i < ideals.size(); ++i) {
      out << "  I" << i << " " << set_to_string(p.base, ideals[i]);
      if (factors[i])
        out << "  = " << set_to_string(p.left, factors[i]->first) << " x "
            << set_to_string(p.right, factors[i]->second) << "\n";
      else
        out << "  SKEW\n";
    }
    if (!skew.empty()) {
      out << "skew ideals:\n";
      for (ElemSet ideal : skew) out << "  " << set_to_string(p.base, ideal) << "\n";
    }
  }
  return skew.empty() ? 0 : 1;
}

inline int cmd_decompose_kernels(const ProductSemiring& p, bool json,
                                 std::ostream& out) {
  KernelAudit audit = audit_kernels(p);
  std::size_t direct = 0, strong = 0;
  for (const auto& row : audit.rows) {
    direct += row.conditions.at("T3.direct");
    strong += row.conditions.at("T2.strong");
  }

  if (json) {
    ordered_json j;
    j["schema_version"] = schema_version;
    j["command"] = "decompose-kernels";
    j["product"] = p.base.name;
    j["congruences"] = audit.congruences.size();
    j["directly_decomposable"] = direct;
    j["strongly_decomposable"] = strong;
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < audit.rows.size(); ++i) {
      const auto& row = audit.rows[i];
      ordered_json r;
      r["congruence"] = congruence_to_string(p.base, audit.congruences[i]);
      r["kernel"] = set_json(p.base, kernel(p.base, audit.congruences[i]));
      r["direct"] = row.conditions.at("T3.direct");
      r["strong"] = row.conditions.at("T2.strong");
      r["t4_sufficient"] = row.conditions.at("T4.sufficient");
      rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    out << j.dump(2) << "\n";
  } else {
    out << "product: " << p.base.name << " (" << p.base.n << " elements)\n";
    out << audit.congruences.size() << " congruences, " << direct
        << " kernels directly decomposable, " << strong << " strongly\n";
    for (std::size_t i = 0; i < audit.rows.size(); ++i) {
      const auto& row = audit.rows[i];
      out << "  C" << i << " kernel="
          << set_to_string(p.base, kernel(p.base, audit.congruences[i]))
          << "  direct=" << (row.conditions.at("T3.direct") ? "yes" : "no")
          << "  strong=" << (row.conditions.at("T2.strong") ? "yes" : "no")
          << "  t4=" << (row.conditions.at("T4.sufficient") ? "yes" : "no") << "\n";
    }
  }
  return direct == audit.rows.size() ? 0 : 1;
}

// -- audit -------------------------------------------------------------

inline int cmd_audit(const std::string& alg1, const std::string& alg2,
                     const std::string& csv_path, bool json, std::ostream& out) {
  ProductSemiring p = direct_product(load_algebra(alg1), load_algebra(alg2));
  Theorem1Audit ideals = audit_theorem1(p);
  KernelAudit kernels = audit_kernels(p);
  if (!csv_path.empty()) write_file(csv_path, audit_to_csv(p, ideals, kernels));

  if (json) {
    ordered_json j;
    j["schema_version"] = schema_version;
    j["command"] = "audit";
    j["product"] = p.base.name;
    ordered_json ideal_rows = ordered_json::array();
    for (std::size_t i = 0; i < ideals.rows.size(); ++i) {
      const auto& row = ideals.rows[i];
      ordered_json r;
      r["subject"] = row.subject;
      r["ideal"] = set_json(p.base, ideals.ideals[i]);
      for (const auto& [name, value] : row.conditions) r[name] = value;
      if (row.witness) {
        ordered_json w = ordered_json::array();
        for (int e : *row.witness) w.push_back(p.base.elem_names[e]);
        r["witness"] = std::move(w);
      }
      if (row.factors)
        r["factors"] = ordered_json::array({set_json(p.left, row.factors->first),
                                            set_json(p.right, row.factors->second)});
      ideal_rows.push_back(std::move(r));
    }
    j["theorem1"] = {{"rows", std::move(ideal_rows)},
                     {"chain_holds", true},
                     {"strictness_witnesses", ideals.strictness.size()}};
    ordered_json kernel_rows = ordered_json::array();
    for (std::size_t i = 0; i < kernels.rows.size(); ++i) {
      const auto& row = kernels.rows[i];
      ordered_json r;
      r["subject"] = row.subject;
      r["congruence"] = congruence_to_string(p.base, kernels.congruences[i]);
      for (const auto& [name, value] : row.conditions) r[name] = value;
      kernel_rows.push_back(std::move(r));
    }
    j["kernels"] = {{"rows", std::move(kernel_rows)}};
    out << j.dump(2) << "\n";
  } else {
    out << "product: " << p.base.name << " (" << p.base.n << " elements)\n";
    out << "theorem 1: " << ideals.rows.size()
        << " ideals, implication chain holds\n";
    for (std::size_t i = 0; i < ideals.rows.size(); ++i) {
      const auto& c = ideals.rows[i].conditions;
      out << "  I" << i << " " << set_to_string(p.base, ideals.ideals[i])
          << "  i=" << (c.at("T1.i") ? "T" : "F")
          << " ii=" << (c.at("T1.ii") ? "T" : "F")
          << " iii=" << (c.at("T1.iii") ? "T" : "F")
          << " iv=" << (c.at("T1.iv") ? "T" : "F") << "\n";
    }
    out << "strictness witnesses ((ii) holds, (iii) fails): "
        << ideals.strictness.size() << "\n";
    for (std::size_t r : ideals.strictness)
      out << "  " << set_to_string(p.base, ideals.ideals[r]) << "\n";
    out << "theorems 2-4: " << kernels.rows.size()
        << " congruences, equivalences hold\n";
    for (std::size_t i = 0; i < kernels.rows.size(); ++i) {
      const auto& c = kernels.rows[i].conditions;
      out << "  C" << i << " strong=" << (c.at("T2.strong") ? "T" : "F")
          << " direct=" << (c.at("T3.direct") ? "T" : "F")
          << " t4=" << (c.at("T4.sufficient") ? "T" : "F") << "\n";
    }
  }
  return 0;
}

// -- malcev ------------------------------------------------------------

inline int cmd_malcev(const std::string& alg, const std::string& scheme,
                      const std::vector<std::string>& term_texts, int m, int n,
                      bool json, std::ostream& out) {
  FiniteSemiring s = load_algebra(alg);
  SchemeReport report;
  std::vector<Term> terms;
  for (const std::string& t : term_texts) terms.push_back(parse_term(t));

  if (scheme == "dist0") {
    if (terms.empty()) terms = dist0_default_terms();
    report = verify_dist0_scheme(s, terms);
  } else if (scheme == "ddck") {
    DdckTerms parts;
    if (terms.empty()) {
      parts = ddck_default_terms();
    } else {
      if (static_cast<int>(terms.size()) != 2 * m + n)
        throw format_error("ddck scheme with m=" + std::to_string(m) + ", n=" +
                           std::to_string(n) + " needs " + std::to_string(2 * m + n) +
                           " terms (s1..sm t1..tm u1..un), got " +
                           std::to_string(terms.size()));
      parts.s.assign(terms.begin(), terms.begin() + m);
      parts.t.assign(terms.begin() + m, terms.begin() + 2 * m);
      parts.u.assign(terms.begin() + 2 * m, terms.end());
    }
    report = verify_ddck_scheme(s, parts.s, parts.t, parts.u);
  } else {
    throw format_error("unknown scheme '" + scheme + "' (expected dist0 or ddck)");
  }

  if (json) {
    ordered_json j;
    j["schema_version"] = schema_version;
    j["command"] = "malcev";
    j["algebra"] = s.name;
    j["scheme"] = report.scheme;
    ordered_json ids = ordered_json::array();
    for (const auto& r : report.identities) {
      ordered_json e;
      e["identity"] = r.name;
      e["holds"] = r.holds;
      if (!r.holds) {
        ordered_json w;
        for (std::size_t i = 0; i < r.witness.size(); ++i)
          w[var_name(static_cast<int>(i) + 1)] = s.elem_names[r.witness[i]];
        e["witness"] = std::move(w);
      }
      ids.push_back(std::move(e));
    }
    j["identities"] = std::move(ids);
    j["pass"] = report.passed();
    out << j.dump(2) << "\n";
  } else {
    out << "algebra: " << s.name << "\n";
    out << "scheme: " << report.scheme << "\n";
    for (const auto& r : report.identities) {
      out << "  " << r.name << ": ";
      if (r.holds)
        out << "holds\n";
      else
        out << "FAILS at " << assignment_text(s, r.witness) << "\n";
    }
    out << "scheme " << report.scheme << ": "
        << (report.passed() ? "PASS" : "FAIL") << "\n";
  }
  return report.passed() ? 0 : 1;
}

// -- numeric -----------------------------------------------------------

inline int cmd_numeric(const std::string& bases, const std::string& gen,
                       const std::string& query, bool json, std::ostream& out) {
  auto b = parse_pair(bases, "--bases");
  NumericProduct ctx{b.first, b.second};
  bool member = principal_membership(ctx, parse_pair(gen, "--gen"),
                                     parse_pair(query, "--query"));
  if (json) {
    ordered_json j;
    j["schema_version"] = schema_version;
    j["command"] = "numeric";
    j["member"] = member;
    out << j.dump(2) << "\n";
  } else {
    out << "member: " << (member ? "true" : "false") << "\n";
  }
  return member ? 0 : 1;
}

} // namespace detail_cli

/// Parses and runs one command line (no argv[0]). Writes the report to
/// `out` and diagnostics to `err`; returns the exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"finite commutative semiring workbench"};
  app.require_subcommand(1);

  bool json = false;

  std::string alg, alg2, dot_path, out_path, csv_path, scheme;
  bool with_lattice = false, ideals_mode = false, kernels_mode = false;
  std::vector<std::string> term_texts;
  int ddck_m = 3, ddck_n = 2;
  std::string bases, gen, query;

  auto add_json = [&](CLI::App* cmd) {
    cmd->add_flag("--json", json, "structured output");
  };

  CLI::App* c_check = app.add_subcommand("check", "validate a semiring");
  c_check->add_option("algebra", alg, "file path or builtin:NAME")->required();
  add_json(c_check);

  CLI::App* c_ideals = app.add_subcommand("ideals", "enumerate the ideals");
  c_ideals->add_option("algebra", alg)->required();
  c_ideals->add_flag("--lattice", with_lattice, "report the ideal lattice");
  c_ideals->add_option("--dot", dot_path, "write the lattice as DOT");
  add_json(c_ideals);

  CLI::App* c_cong = app.add_subcommand("congruences", "enumerate Con S");
  c_cong->add_option("algebra", alg)->required();
  add_json(c_cong);

  CLI::App* c_ker = app.add_subcommand("kernels", "congruence kernels and their lattice");
  c_ker->add_option("algebra", alg)->required();
  c_ker->add_flag("--lattice", with_lattice, "report the kernel lattice");
  add_json(c_ker);

  CLI::App* c_prod = app.add_subcommand("product", "direct product as a semiring file");
  c_prod->add_option("algebra1", alg)->required();
  c_prod->add_option("algebra2", alg2)->required();
  c_prod->add_option("--out", out_path, "write to a file instead of stdout");

  CLI::App* c_dec = app.add_subcommand("decompose", "direct decomposability audit");
  c_dec->add_option("algebra1", alg)->required();
  c_dec->add_option("algebra2", alg2)->required();
  c_dec->add_flag("--ideals", ideals_mode, "decompose ideals (Theorem 1)");
  c_dec->add_flag("--kernels", kernels_mode, "decompose congruence kernels (Theorems 2-3)");
  add_json(c_dec);

  CLI::App* c_audit = app.add_subcommand("audit", "full Theorem 1-4 audit");
  c_audit->add_option("algebra1", alg)->required();
  c_audit->add_option("algebra2", alg2)->required();
  c_audit->add_option("--csv", csv_path, "write the verdict table as CSV");
  add_json(c_audit);

  CLI::App* c_malcev = app.add_subcommand("malcev", "verify a term scheme");
  c_malcev->add_option("algebra", alg)->required();
  c_malcev->add_option("--scheme", scheme, "dist0 or ddck")->required();
  c_malcev->add_option("--terms", term_texts, "term strings; defaults to the stock witness");
  c_malcev->add_option("--m", ddck_m, "number of s/t term pairs (ddck)");
  c_malcev->add_option("--n", ddck_n, "number of u terms (ddck)");
  add_json(c_malcev);

  CLI::App* c_num = app.add_subcommand("numeric", "principal ideal membership in a1N x a2N");
  c_num->add_option("--bases", bases, "a1,a2")->required();
  c_num->add_option("--gen", gen, "g1,g2")->required();
  c_num->add_option("--query", query, "q1,q2")->required();
  add_json(c_num);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    using namespace detail_cli;
    if (app.got_subcommand(c_check)) return cmd_check(alg, json, out);
    if (app.got_subcommand(c_ideals))
      return cmd_ideals(alg, with_lattice, dot_path, json, out);
    if (app.got_subcommand(c_cong)) return cmd_congruences(alg, json, out);
    if (app.got_subcommand(c_ker)) return cmd_kernels(alg, with_lattice, json, out);
    if (app.got_subcommand(c_prod)) return cmd_product(alg, alg2, out_path, out);
    if (app.got_subcommand(c_dec)) {
      if (ideals_mode == kernels_mode)
        throw format_error("decompose needs exactly one of --ideals / --kernels");
      ProductSemiring p = direct_product(load_algebra(alg), load_algebra(alg2));
      return ideals_mode ? cmd_decompose_ideals(p, json, out)
                         : cmd_decompose_kernels(p, json, out);
    }
    if (app.got_subcommand(c_audit)) return cmd_audit(alg, alg2, csv_path, json, out);
    if (app.got_subcommand(c_malcev))
      return cmd_malcev(alg, scheme, term_texts, ddck_m, ddck_n, json, out);
    if (app.got_subcommand(c_num)) return cmd_numeric(bases, gen, query, json, out);
    err << "error: no command\n";
    return 2;
  } catch (const internal_error& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

/// Library-level entry point mirroring the binary: captures the report and
/// diagnostics instead of writing to the process streams.
inline CommandOutcome dispatch(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

} // namespace semiring_lab::cli
