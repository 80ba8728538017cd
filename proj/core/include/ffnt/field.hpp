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

#ifndef FFNT_FIELD_HPP
#define FFNT_FIELD_HPP

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace ffnt {

/// An element of a finite field, encoded as the base-p digit packing of its
/// coordinate vector over the prime field: id = sum_i c_i p^i, 0 <= id < p^e.
/// 0 is the zero element and 1 is the multiplicative identity.
using Fe = std::uint32_t;

/// F_{p^e} with a deterministically chosen modulus (the lexicographically
/// least monic irreducible of degree e over F_p, coefficient vectors ordered
/// low-to-high as base-p integers). Multiplication runs through exp/log
/// tables built at construction, so the element count is capped.
///
/// Field is an immutable shared handle; copies are cheap and all state is
/// read-only after construction, so values are safe to share across threads.
class Field {
 public:
  static constexpr std::uint64_t kMaxOrder = 1u << 22;

  /// Empty handle: only assignment is valid until a real field is copied in.
  Field() = default;

  /// Builds F_{p^e}. Throws std::invalid_argument for non-prime p, e < 1,
  /// or p^e beyond the table cap.
  static Field make(std::uint32_t p, std::uint32_t e);

  std::uint32_t p() const { return d_->p; }
  std::uint32_t e() const { return d_->e; }
  /// Field order q = p^e.
  std::uint64_t order() const { return d_->n; }
  /// Modulus coefficients over F_p, low-to-high, length e+1 (monic).
  const std::vector<std::uint32_t>& modulus() const { return d_->mod; }

  bool same(const Field& o) const { return d_ == o.d_ || (p() == o.p() && e() == o.e()); }

  Fe zero() const { return 0; }
  Fe one() const { return 1; }
  /// Image of an (arbitrary-sign) integer under Z -> F_p -> F_{p^e}.
  Fe from_int(std::int64_t v) const;

  Fe add(Fe a, Fe b) const;
  Fe sub(Fe a, Fe b) const;
  Fe neg(Fe a) const { return sub(0, a); }
  Fe mul(Fe a, Fe b) const {
    if (a == 0 || b == 0) return 0;
    std::uint64_t s = d_->log[a] + d_->log[b];
    std::uint64_t g = d_->n - 1;
    return d_->exp[s >= g ? s - g : s];
  }
  Fe inv(Fe a) const {
    if (a == 0) throw std::domain_error("inverse of zero field element");
    std::uint64_t g = d_->n - 1;
    return d_->exp[(g - d_->log[a]) % g];
  }
  Fe div(Fe a, Fe b) const { return mul(a, inv(b)); }
  Fe pow(Fe a, std::uint64_t k) const;
  bool is_square(Fe a) const;

  /// Multiplicative order of a nonzero element.
  std::uint64_t mult_order(Fe a) const;

  /// A fixed generator of the multiplicative group.
  Fe generator() const { return d_->exp[1]; }

  /// Coordinates of a over F_p, low-to-high, length e.
  std::vector<std::uint32_t> coords(Fe a) const;
  Fe from_coords(const std::vector<std::uint32_t>& c) const;

  /// For sub = F_{p^b} with b | e: the image of every element of sub under
  /// the embedding determined by the least root of sub's modulus in this
  /// field. Result is indexed by sub element id.
  std::vector<Fe> embedding(const Field& sub) const;

  /// "GF(p^e)"
  std::string name() const;

 private:
  struct Data {
    std::uint32_t p, e;
    std::uint64_t n;
    std::vector<std::uint32_t> mod;
    std::vector<Fe> exp;             // exp[k] = g^k, k in [0, n-1)
    std::vector<std::uint64_t> log;  // log[exp[k]] = k
    std::vector<std::pair<std::uint64_t, unsigned>> unit_order_factors;  // of n-1
  };
  explicit Field(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
};

bool is_prime_u64(std::uint64_t n);

/// Factors n into (prime, exponent) pairs by trial division.
std::vector<std::pair<std::uint64_t, unsigned>> factor_u64(std::uint64_t n);

}  // namespace ffnt

#endif  // FFNT_FIELD_HPP
