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

#ifndef FFNT_RESIDUE_HPP
#define FFNT_RESIDUE_HPP

#include <complex>
#include <memory>
#include <optional>
#include <vector>

#include "ffnt/poly.hpp"

namespace ffnt {

/// Residues mod g are indexed by packing their coefficient vector in base q:
/// index = sum_i coeff_i q^i with coeff_i an element id.
using ResidueIdx = std::uint64_t;

/// Structure of the finite abelian group (F_q[T]/g)^x as a direct sum of
/// cyclic groups: every unit is uniquely a product of generator powers, and
/// each generator really has the declared order, so characters defined on
/// exponent vectors are honest homomorphisms. Verified exhaustively at
/// construction.
struct UnitGroupStructure {
  std::vector<ResidueIdx> generators;
  std::vector<std::uint64_t> orders;  // product equals group_order
  std::uint64_t group_order = 0;
  std::uint64_t exponent = 1;  // N = lcm of orders
  /// residue index -> generator-exponent vector (meaningful only for units).
  /// dlog[r][i] < orders[i].
  std::vector<std::vector<std::uint32_t>> dlog;
  std::vector<char> unit_mask;  // residue index -> coprime to g
};

/// The quotient ring F_q[T]/g for monic nonconstant g, with unit-group and
/// character machinery computed on demand (exhaustively, so capped).
class ResidueRing {
 public:
  static constexpr std::uint64_t kDefaultCap = 200000;

  ResidueRing(Field k, Poly g, std::uint64_t enumeration_cap = kDefaultCap);

  const Field& field() const { return d_->k; }
  const Poly& modulus() const { return d_->g; }
  unsigned m() const { return d_->m; }
  /// q^m residues.
  std::uint64_t size() const { return d_->size; }

  ResidueIdx index_of(const Poly& f) const;
  Poly poly_of(ResidueIdx r) const;
  ResidueIdx mul(ResidueIdx a, ResidueIdx b) const;
  bool is_unit(ResidueIdx r) const { return structure().unit_mask[r] != 0; }
  ResidueIdx one_idx() const { return 1; }

  /// Sorted list of unit residue indices.
  const std::vector<ResidueIdx>& units() const;
  const UnitGroupStructure& structure() const;

  bool same(const ResidueRing& o) const { return d_ == o.d_; }

 private:
  struct Data {
    Field k;
    Poly g;
    unsigned m;
    std::uint64_t size;
    std::uint64_t cap;
    mutable std::vector<ResidueIdx> units;
    mutable std::unique_ptr<UnitGroupStructure> structure;
  };
  std::shared_ptr<Data> d_;
};

/// Marker for chi(f) with gcd(f, g) != 1 is std::nullopt; otherwise the value
/// is the exponent k of exp(2 pi i k / N) where N is the group exponent.
class Character {
 public:
  Character(ResidueRing ring, std::vector<std::uint64_t> exponents);

  const ResidueRing& ring() const { return ring_; }
  const std::vector<std::uint64_t>& exponents() const { return exps_; }
  std::uint64_t order_exponent() const;  // N

  bool is_trivial() const;

  /// Exponent mod N, or nullopt (the extension-by-zero marker).
  std::optional<std::uint64_t> eval_exponent(const Poly& f) const;
  std::optional<std::uint64_t> eval_exponent_idx(ResidueIdx r) const;
  std::complex<double> eval(const Poly& f) const;

  Character conjugate() const;

  bool operator==(const Character& o) const { return exps_ == o.exps_; }

 private:
  ResidueRing ring_;
  std::vector<std::uint64_t> exps_;  // exps_[i] < orders[i]
};

/// All group_order characters, trivial first, in odometer order over the
/// generator exponents.
std::vector<Character> characters(const ResidueRing& ring);

/// True iff chi does not factor through any proper divisor modulus: for every
/// proper monic divisor g' of g, chi is nontrivial on the kernel of
/// (F_q[T]/g)^x -> (F_q[T]/g')^x.
bool is_primitive(const Character& chi);

/// True iff chi restricted to the scalar units F_q^x is nontrivial.
bool is_odd(const Character& chi);

std::complex<double> root_of_unity(std::uint64_t k, std::uint64_t N);

}  // namespace ffnt

#endif  // FFNT_RESIDUE_HPP
