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

#ifndef FFNT_VARIETY_HPP
#define FFNT_VARIETY_HPP

#include <complex>
#include <optional>
#include <vector>

#include "ffnt/lfunc.hpp"
#include "ffnt/residue.hpp"

namespace ffnt {

/// Tuples (f_1,...,f_{2k}) of monic polynomials, deg f_i = d_i, coprime to g,
/// with the first-half product congruent to the second-half product mod g.
/// The optional c-vector deforms the defining equations at each root of g:
/// prod_{i<=k} f_i(alpha_j) = c_j * prod_{i>k} f_i(alpha_j); it requires g
/// squarefree and defaults to all ones (the undeformed variety).
struct VarietySpec {
  ResidueRing ring;
  std::vector<unsigned> degrees;  // size 2k
  unsigned k = 1;
  std::vector<Fe> deformation;  // empty = all-ones; entries in the base field
  std::uint64_t enumeration_cap = 100000000;

  VarietySpec(ResidueRing r, std::vector<unsigned> d, unsigned kk);
  std::uint64_t tuple_space_size() const;
  unsigned total_degree() const;
};

using VarietyPoint = std::vector<Poly>;  // 2k monic polynomials

struct CountResult {
  std::uint64_t count = 0;
  std::vector<VarietyPoint> points;  // filled only when collect = true
};

/// Exact |X(F_q)| by exhaustive enumeration with early gcd rejection,
/// partitioned over the f_1 coefficient block with a deterministic merge.
CountResult count_points(const VarietySpec& spec, bool collect = false);

struct OrthogonalityResult {
  std::complex<double> lhs;  // sum over all chi of prod c_{d_i}(chi) (conj on second half)
  std::uint64_t rhs = 0;     // group_order * |X(F_q)|
  bool pass = false;         // | lhs - rhs | < 0.5
};

/// The character-orthogonality identity linking coefficient products to the
/// point count; both sides are integers in exact arithmetic.
OrthogonalityResult orthogonality_identity(const VarietySpec& spec);

/// Singularity via the divisibility criterion: some h with deg h < m is a
/// multiple of every f_i, i.e. deg lcm(f_i) <= m-1. Needs sum d_i >= m and
/// squarefree g.
bool is_singular_lcm(const VarietyPoint& point, const VarietySpec& spec);

/// Singularity via the rank of the m x (sum d_i) Jacobian of the root-wise
/// congruence equations, evaluated over the splitting field of g with exact
/// Gaussian elimination.
bool is_singular_jacobian(const VarietyPoint& point, const VarietySpec& spec);

struct SingularScan {
  std::uint64_t total_points = 0;
  std::vector<VarietyPoint> singular;  // by the lcm criterion
  bool criteria_agree = true;          // lcm vs Jacobian on every point
};

/// Enumerates X(F_q) and returns all singular points, certifying each point
/// with both criteria. Disagreements are recorded, not thrown: over a finite
/// splitting field the two criteria are only expected to agree empirically.
SingularScan singular_scan(const VarietySpec& spec);

/// Exact rank by Gaussian elimination over a finite field. Rows are matrix
/// entries in row-major order.
unsigned matrix_rank(const Field& k, std::vector<std::vector<Fe>> rows);

}  // namespace ffnt

#endif  // FFNT_VARIETY_HPP
