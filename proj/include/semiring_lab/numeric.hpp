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

#include <cstdint>
#include <string>
#include <utility>

#include "semiring_lab/errors.hpp"

namespace semiring_lab {

/// The product a1*N x a2*N of two numeric semirings of non-negative
/// multiples.
struct NumericProduct {
  std::int64_t base1 = 1;
  std::int64_t base2 = 1;
};

using NumericPair = std::pair<std::int64_t, std::int64_t>;

namespace detail {

inline void require_carrier(const NumericProduct& ctx, NumericPair p,
                            const char* what) {
  if (ctx.base1 < 1 || ctx.base2 < 1)
    throw carrier_error("numeric bases must be positive");
  if (p.first < 0 || p.second < 0 || p.first % ctx.base1 != 0 ||
      p.second % ctx.base2 != 0)
    throw carrier_error(std::string(what) + " (" + std::to_string(p.first) + "," +
                        std::to_string(p.second) + ") is not in the carrier " +
                        std::to_string(ctx.base1) + "N x " +
                        std::to_string(ctx.base2) + "N");
}

} // namespace detail

/// Membership of q in the principal ideal generated by g, i.e. whether
/// q_i = k*g_i + g_i*s_i has a common solution with k >= 0 and s_i in the
/// carrier. k*g_i grows strictly in k for g_i > 0, so the search is bounded
/// by min over those coordinates of q_i/g_i; a coordinate with g_i = 0
/// degenerates to q_i = 0. The residue check per coordinate is closed-form
/// divisibility by g_i*a_i.
inline bool principal_membership(const NumericProduct& ctx, NumericPair gen,
                                 NumericPair query) {
  detail::require_carrier(ctx, gen, "generator");
  detail::require_carrier(ctx, query, "query");

  const std::int64_t g[2] = {gen.first, gen.second};
  const std::int64_t q[2] = {query.first, query.second};
  const std::int64_t a[2] = {ctx.base1, ctx.base2};

  std::int64_t bound = -1;
  for (int i = 0; i < 2; ++i) {
    if (g[i] == 0) {
      if (q[i] != 0) return false;
    } else {
      std::int64_t k_max = q[i] / g[i];
      if (bound < 0 || k_max < bound) bound = k_max;
    }
  }
  if (bound < 0) return true; // g = (0,0), both queries forced to 0 above

  for (std::int64_t k = 0; k <= bound; ++k) {
    bool fits = true;
    for (int i = 0; i < 2 && fits; ++i) {
      if (g[i] == 0) continue;
      std::int64_t rest = q[i] - k * g[i];
      if (rest < 0 || rest % (g[i] * a[i]) != 0) fits = false;
    }
    if (fits) return true;
  }
  return false;
}

/// The closed-form description of I(4,6) inside 2N x 2N:
/// (8N x 12N) u ((4+8N) x (6+12N)).
inline bool closed_form_membership(const NumericProduct& ctx, NumericPair query) {
  if (ctx.base1 != 2 || ctx.base2 != 2)
    throw carrier_error("closed form is specific to bases (2,2)");
  detail::require_carrier(ctx, query, "query");
  auto [q1, q2] = query;
  bool even_branch = q1 % 8 == 0 && q2 % 12 == 0;
  bool odd_branch = q1 % 8 == 4 && q2 % 12 == 6;
  return even_branch || odd_branch;
}

} // namespace semiring_lab
