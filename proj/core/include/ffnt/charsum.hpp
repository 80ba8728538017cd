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

#ifndef FFNT_CHARSUM_HPP
#define FFNT_CHARSUM_HPP

#include <complex>
#include <vector>

#include "ffnt/cyclosum.hpp"
#include "ffnt/residue.hpp"

namespace ffnt {

/// The short interval around f: S = sum over deg h < n, gcd(f+h, g) = 1 of
/// chi(f+h). Terms where chi extends by zero are dropped from the sum rather
/// than contributing zeroes, so `terms` counts the support.
struct IntervalSum {
  CycloSum exact;               // exponent multiset, exact
  std::complex<double> value;   // = exact.value()
  std::uint64_t terms = 0;      // h kept (coprime shift)
  std::uint64_t interval = 0;   // q^n, the trivial bound
};

IntervalSum char_sum(const Character& chi, const Poly& f, unsigned n);

struct SsBoundCheck {
  double abs_sum = 0.0;
  double bound = 0.0;           // (sqrt(q) + 1) * C(m-1, n) * q^(n/2)
  double trivial_bound = 0.0;   // q^n
  double ratio = 0.0;           // abs_sum / bound (0 when bound = 0)
  bool binomial_zero = false;   // n > m-1: the stated bound degenerates to 0
  bool within = false;
};

/// Empirical check of |S| against the square-root cancellation bound. The
/// hypotheses (squarefree g, nontrivial chi) come from the surrounding
/// context of the bound; a violation is a reported finding, not a panic.
SsBoundCheck check_ss_bound(const Character& chi, const Poly& f, unsigned n);

/// Fiber of the covering a -> (coefficients of a)^q over a base point h:
/// residues a in F_{q^e}[T]/g, invertible, with a^{(q)} = a (f+h) mod g,
/// where a^{(q)} raises each coefficient of a to the q-th power. The
/// extension degree e is the multiplicative order of f+h mod g, so the q-th
/// power map stabilizes the fiber.
struct LangFiber {
  Poly h;
  unsigned e = 1;
  Field ext;                // F_{q^e}
  std::vector<Fe> embed;    // base field -> ext
  std::vector<Poly> solutions;  // polynomials over ext, deg < m, sorted
};

/// Solves the fiber equation as an F_p-linear kernel on the coefficient
/// space of F_{q^e}[T]/g (both the q-power map and multiplication by f+h
/// are F_p-linear), then keeps the invertible residues.
LangFiber lang_fiber(const ResidueRing& ring, const Poly& f, const Poly& h);

struct TorsorCheck {
  Poly h;
  std::uint64_t fiber_size = 0;
  bool size_ok = false;       // fiber size equals the unit group order
  bool action_ok = false;     // units act freely and transitively on the fiber
  bool frobenius_ok = false;  // coefficient-wise q-power = multiplication by f+h
  Poly witness;               // one fiber point
};

struct TorsorReport {
  std::vector<TorsorCheck> checks;  // one per valid h, deg h < n
  std::uint64_t group_order = 0;
  bool pass = false;
};

/// Exhaustive verification, for every base point h with deg h < n and
/// gcd(f+h, g) = 1, of the three covering-space claims: fiber size, simply
/// transitive unit action, and Frobenius acting as multiplication by f+h.
TorsorReport verify_torsor(const ResidueRing& ring, const Poly& f, unsigned n);

std::uint64_t binomial(unsigned n, unsigned k);

}  // namespace ffnt

#endif  // FFNT_CHARSUM_HPP
