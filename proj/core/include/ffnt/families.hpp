/*
 * Copyright 2026 The ffnt Authors
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

#ifndef FFNT_FAMILIES_HPP
#define FFNT_FAMILIES_HPP

#include <cstdint>
#include <vector>

#include "ffnt/field.hpp"

namespace ffnt {

enum class FamilyKind { kConic, kCubic };

/// Two one-parameter plane families used as degeneration testbeds:
///   conic:  y^2 = x^2 + t       (projective count: affine + 2 at infinity)
///   cubic:  y^2 = x^3 + x^2 + t (projective count: affine + 1 at infinity)
/// Counts are over F_{q^r} with the parameter t in the base field F_q.
struct FamilyCount {
  std::uint64_t affine = 0;
  std::uint64_t projective = 0;
};

FamilyCount count_family(FamilyKind kind, const Field& base, Fe t, unsigned r);

/// Parameter values in F_q where the fiber is singular, found by scanning the
/// discriminant of the defining equation: t = 0 for the conic (rank drop of
/// the quadratic form), disc_x(x^3 + x^2 + t) = -t(4 + 27t) for the cubic.
/// Odd characteristic only for the cubic.
std::vector<Fe> singular_parameters(FamilyKind kind, const Field& base);

struct ZetaConsistency {
  std::vector<std::uint64_t> counts;     // projective counts over F_{q^r}, r = 1..depth
  std::vector<std::uint64_t> predicted;  // from the degree-1 count via the recurrence
  std::int64_t trace = 0;                // a with |X(F_q)| = q + 1 - a
  std::uint64_t max_deviation = 0;
  bool pass = false;
};

/// For a smooth fiber the projective counts over every extension are pinned
/// by the single trace a: with s_r = alpha^r + beta^r, alpha beta = q,
/// alpha + beta = a, the count over F_{q^r} is q^r + 1 - s_r and s_r obeys
/// s_r = a s_{r-1} - q s_{r-2}, s_0 = 2. A genuinely singular fiber breaks
/// this, which is the point of running it across the whole parameter line.
ZetaConsistency zeta_consistency(FamilyKind kind, const Field& base, Fe t, unsigned depth);

struct NodeParamCheck {
  std::uint64_t parameterized = 0;  // points hit by w -> (w^2 - 1, w(w^2 - 1))
  std::uint64_t affine = 0;         // direct affine count of y^2 = x^3 + x^2
  std::uint64_t node_preimages = 0; // w values landing on (0, 0)
  bool pass = false;
};

/// The degenerate cubic y^2 = x^3 + x^2 factors through the line: the map
/// w -> (w^2 - 1, w(w^2 - 1)) hits every affine point, injectively away from
/// the node (0,0), which has exactly the w with w^2 = 1 as preimages. Checked
/// by exhaustive comparison over F_{q^r}.
NodeParamCheck node_parameterization_check(const Field& base, unsigned r);

}  // namespace ffnt

#endif  // FFNT_FAMILIES_HPP
