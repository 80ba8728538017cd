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

#ifndef FFNT_CYCLOSUM_HPP
#define FFNT_CYCLOSUM_HPP

#include <complex>
#include <cstdint>
#include <vector>

namespace ffnt {

/// Integer combination of N-th roots of unity, kept exact as a multiset of
/// exponents. Zero-testing reduces the exponent polynomial mod the N-th
/// cyclotomic polynomial, so identities like 1 + z + z^2 = 0 for z = zeta_3
/// are decided exactly.
class CycloSum {
 public:
  explicit CycloSum(std::uint64_t n) : n_(n), counts_(n, 0) {}

  std::uint64_t n() const { return n_; }
  const std::vector<std::int64_t>& counts() const { return counts_; }

  void add_root(std::uint64_t exponent, std::int64_t mult = 1) {
    counts_[exponent % n_] += mult;
  }
  CycloSum& operator+=(const CycloSum& o);

  CycloSum conjugate() const;

  std::complex<double> value() const;
  /// Sum of |mult| over all exponents: a crude bound on |value|.
  std::int64_t total_terms() const;

  bool is_zero_exact() const;
  /// Exact equality as complex numbers.
  bool equals_exact(const CycloSum& o) const;

 private:
  std::uint64_t n_;
  std::vector<std::int64_t> counts_;
};

/// Coefficients of the N-th cyclotomic polynomial, low-to-high.
std::vector<std::int64_t> cyclotomic_poly(std::uint64_t n);

}  // namespace ffnt

#endif  // FFNT_CYCLOSUM_HPP
