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

#include <doctest.h>

#include "semiring_lab/semiring.hpp"

using namespace semiring_lab;

namespace {

RawTables raw_of(const FiniteSemiring& s) {
  return detail::raw_from_index_tables(s.name, s.elem_names, s.add, s.mul);
}

} // namespace

TEST_CASE("every builtin passes the axiom checker") {
  for (const std::string& name : builtin_names()) {
    FiniteSemiring s = builtin(name);
    AxiomReport report = verify_axioms(raw_of(s));
    CAPTURE(name);
    CHECK(report.valid);
    CHECK(report.violations.empty());
  }
}

TEST_CASE("every direct product of builtins passes the axiom checker") {
  for (const std::string& a : builtin_names())
    for (const std::string& b : builtin_names()) {
      ProductSemiring p = direct_product(builtin(a), builtin(b));
      CAPTURE(a);
      CAPTURE(b);
      CHECK(verify_axioms(raw_of(p.base)).valid);
    }
}

TEST_CASE("axiom checker reports violations with least witnesses") {
  // Three-element chain with top*top redefined to 0. This breaks both
  // mul-associativity and distributivity; the expected witnesses are
  // recomputed here with plain scans over the same tables.
  RawTables raw;
  raw.name = "broken";
  raw.elements = {"0", "a", "1"};
  raw.zero = "0";
  raw.add = {{"0", "a", "1"}, {"a", "a", "1"}, {"1", "1", "1"}};
  raw.mul = {{"0", "0", "0"}, {"0", "a", "a"}, {"0", "a", "0"}};

  AxiomReport report = verify_axioms(raw);
  REQUIRE_FALSE(report.valid);

  auto resolved = detail::resolve_tables(raw);
  const auto& add = resolved.add;
  const auto& mul = resolved.mul;
  std::vector<int> assoc_witness, dist_witness;
  for (int i = 0; i < 3 && assoc_witness.empty(); ++i)
    for (int j = 0; j < 3 && assoc_witness.empty(); ++j)
      for (int k = 0; k < 3; ++k)
        if (mul[mul[i][j]][k] != mul[i][mul[j][k]]) {
          assoc_witness = {i, j, k};
          break;
        }
  for (int i = 0; i < 3 && dist_witness.empty(); ++i)
    for (int j = 0; j < 3 && dist_witness.empty(); ++j)
      for (int k = 0; k < 3; ++k)
        if (mul[add[i][j]][k] != add[mul[i][k]][mul[j][k]]) {
          dist_witness = {i, j, k};
          break;
        }
  REQUIRE_FALSE(assoc_witness.empty());
  REQUIRE_FALSE(dist_witness.empty());

  bool saw_assoc = false, saw_dist = false;
  for (const auto& v : report.violations) {
    if (v.axiom == "mul-associativity") {
      saw_assoc = true;
      CHECK(v.witness == assoc_witness);
    }
    if (v.axiom == "distributivity") {
      saw_dist = true;
      CHECK(v.witness == dist_witness);
    }
  }
  CHECK(saw_assoc);
  CHECK(saw_dist);
  CHECK_THROWS_AS(make_semiring(raw), axiom_error);
}

TEST_CASE("format errors are distinct from axiom violations") {
  RawTables raw;
  raw.name = "fmt";
  raw.elements = {"0", "1"};
  raw.zero = "0";
  raw.add = {{"0", "1"}, {"1", "1"}};
  raw.mul = {{"0", "0"}, {"0", "1"}};

  SUBCASE("duplicate element names") {
    raw.elements = {"0", "0"};
    CHECK_THROWS_AS(verify_axioms(raw), format_error);
  }
  SUBCASE("zero not declared") {
    raw.zero = "z";
    CHECK_THROWS_AS(verify_axioms(raw), format_error);
  }
  SUBCASE("table entry not a declared name") {
    raw.mul[1][1] = "q";
    CHECK_THROWS_AS(verify_axioms(raw), format_error);
  }
  SUBCASE("ragged table") {
    raw.add[1].pop_back();
    CHECK_THROWS_AS(verify_axioms(raw), format_error);
  }
}

TEST_CASE("unit detection") {
  CHECK(is_unitary(builtin("D2")) == 1);
  CHECK(builtin("D2").elem_names[*is_unitary(builtin("D2"))] == "1");
  CHECK_FALSE(is_unitary(builtin("R2")).has_value());
  CHECK_FALSE(is_unitary(builtin("R4")).has_value());
  CHECK_FALSE(is_unitary(builtin("S8")).has_value());
  CHECK(builtin("D3").elem_names[*is_unitary(builtin("D3"))] == "1");
  CHECK(builtin("Z2F").elem_names[*is_unitary(builtin("Z2F"))] == "1");
  CHECK(builtin("Z3F").elem_names[*is_unitary(builtin("Z3F"))] == "1");
}

TEST_CASE("idempotency detection") {
  CHECK(is_idempotent(builtin("D2")));
  CHECK(is_idempotent(builtin("D3")));
  CHECK(is_idempotent(builtin("Z2F")));
  CHECK_FALSE(is_idempotent(builtin("R2")));
  CHECK_FALSE(is_idempotent(builtin("R4")));
  CHECK_FALSE(is_idempotent(builtin("S8")));
  CHECK_FALSE(is_idempotent(builtin("Z3F")));
}

TEST_CASE("R4 addition is the Klein four-group table") {
  FiniteSemiring r4 = builtin("R4");
  // a+a = 0, a+b = c, pairwise sums of distinct non-zero elements give the
  // third one
  int a = *r4.index_of("a"), b = *r4.index_of("b"), c = *r4.index_of("c");
  CHECK(r4.add[a][a] == r4.zero);
  CHECK(r4.add[b][b] == r4.zero);
  CHECK(r4.add[c][c] == r4.zero);
  CHECK(r4.add[a][b] == c);
  CHECK(r4.add[a][c] == b);
  CHECK(r4.add[b][c] == a);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(r4.mul[i][j] == r4.zero);
}

TEST_CASE("direct product layout and capacity") {
  ProductSemiring p = direct_product(builtin("R2"), builtin("D2"));
  CHECK(p.base.n == 4);
  CHECK(p.base.elem_names[p.base.zero] == "(0|0)");
  CHECK(p.base.name == "R2xD2");

  ProductSemiring q = direct_product(builtin("R4"), builtin("D2"));
  CHECK(q.base.n == 8);

  // 9 x 8 = 72 elements blows the one-word cap
  std::vector<std::string> names;
  for (int i = 0; i < 9; ++i) names.push_back(std::to_string(i));
  FiniteSemiring d9 = make_semiring(detail::chain_lattice_raw("D9", names));
  CHECK_THROWS_AS(direct_product(d9, builtin("S8")), capacity_error);
}

TEST_CASE("product projections commute with both operations") {
  for (const std::string& a : builtin_names())
    for (const std::string& b : builtin_names()) {
      ProductSemiring p = direct_product(builtin(a), builtin(b));
      // pair_of is a bijection onto left x right
      std::vector<char> seen(static_cast<std::size_t>(p.left.n) * p.right.n, 0);
      for (int k = 0; k < p.base.n; ++k) {
        auto [l, r] = p.pair_of(k);
        REQUIRE(l >= 0);
        REQUIRE(l < p.left.n);
        REQUIRE(r >= 0);
        REQUIRE(r < p.right.n);
        CHECK_FALSE(seen[static_cast<std::size_t>(l) * p.right.n + r]);
        seen[static_cast<std::size_t>(l) * p.right.n + r] = 1;
        CHECK(p.index_of(l, r) == k);
      }
      for (int x = 0; x < p.base.n; ++x)
        for (int y = 0; y < p.base.n; ++y) {
          auto [x1, x2] = p.pair_of(x);
          auto [y1, y2] = p.pair_of(y);
          CHECK(p.pair_of(p.base.add[x][y]) ==
                std::pair<int, int>{p.left.add[x1][y1], p.right.add[x2][y2]});
          CHECK(p.pair_of(p.base.mul[x][y]) ==
                std::pair<int, int>{p.left.mul[x1][y1], p.right.mul[x2][y2]});
        }
    }
}

TEST_CASE("zero is normalized to index 0 and the permutation is recorded") {
  RawTables raw;
  raw.name = "perm";
  raw.elements = {"a", "z", "b"};
  raw.zero = "z";
  // chain z < a < b, add = join, mul = meet (declared in scrambled order)
  raw.add = {{"a", "a", "b"}, {"a", "z", "b"}, {"b", "b", "b"}};
  raw.mul = {{"a", "z", "a"}, {"z", "z", "z"}, {"a", "z", "b"}};
  FiniteSemiring s = make_semiring(raw);
  CHECK(s.zero == 0);
  CHECK(s.elem_names == std::vector<std::string>{"z", "a", "b"});
  CHECK(s.declared_index == std::vector<int>{1, 0, 2});
  CHECK(verify_axioms(raw_of(s)).valid);
}

TEST_CASE("the one-element semiring is accepted") {
  RawTables raw;
  raw.name = "one";
  raw.elements = {"0"};
  raw.zero = "0";
  raw.add = {{"0"}};
  raw.mul = {{"0"}};
  FiniteSemiring s = make_semiring(raw);
  CHECK(s.n == 1);
}

TEST_CASE("unknown builtin raises a format error") {
  CHECK_THROWS_AS(builtin("nope"), format_error);
}
