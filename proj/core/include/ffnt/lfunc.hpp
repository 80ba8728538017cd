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

#ifndef FFNT_LFUNC_HPP
#define FFNT_LFUNC_HPP

#include <complex>
#include <vector>

#include "ffnt/cyclosum.hpp"
#include "ffnt/residue.hpp"

namespace ffnt {

/// c_d(chi) = sum over monic f of degree d coprime to g of chi(f), exact.
CycloSum char_coefficient(const Character& chi, unsigned d);

/// L(chi, u) = sum_d c_d(chi) u^d for a nontrivial character mod g of degree
/// m; a polynomial of degree <= m-1. The guard coefficient c_m is computed
/// and checked to vanish exactly at construction.
class LPolynomial {
 public:
  explicit LPolynomial(Character chi);

  const Character& character() const { return chi_; }
  /// Exact coefficients c_0 .. c_{m-1}.
  const std::vector<CycloSum>& coeffs() const { return coeffs_; }
  /// Degree after exact trimming of vanishing top coefficients.
  int degree() const;
  std::vector<std::complex<double>> complex_coeffs() const;
  std::complex<double> eval(std::complex<double> u) const;

 private:
  Character chi_;
  std::vector<CycloSum> coeffs_;
};

struct RhReport {
  std::vector<double> reciprocal_root_moduli;  // sorted ascending
  double max_deviation = 0.0;                  // max | modulus - sqrt(q) |
  bool converged = true;
};

/// Finds the roots of L numerically (Durand-Kerner) and reports reciprocal
/// root moduli and their worst deviation from sqrt(q). Constant L passes
/// vacuously. Non-convergence is reported, never silently ignored.
RhReport check_rh(const LPolynomial& l, double tol = 1e-6);

/// Roots of a complex polynomial (coefficients low-to-high, exact-degree).
std::vector<std::complex<double>> complex_roots(std::vector<std::complex<double>> coeffs,
                                                bool* converged = nullptr);

enum class Population { kAllNontrivial, kPrimitiveOdd };

struct MomentReport {
  double value = 0.0;           // (1/group_order) * sum of |L|^{2k}
  std::uint64_t group_order = 0;
  std::uint64_t selected = 0;   // characters included in the sum
  Population population = Population::kAllNontrivial;
};

/// Direct moment computation at a point u; the trivial character is always
/// excluded (its series has a pole, not a polynomial).
MomentReport moment_direct(const ResidueRing& ring, std::complex<double> u, unsigned k,
                           Population population);

}  // namespace ffnt

#endif  // FFNT_LFUNC_HPP
