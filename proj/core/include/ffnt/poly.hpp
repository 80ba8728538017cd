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

#ifndef FFNT_POLY_HPP
#define FFNT_POLY_HPP

#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ffnt/field.hpp"

namespace ffnt {

/// Degree of the zero polynomial: a sentinel strictly below every real
/// degree, so accidental arithmetic on it is loud rather than silent.
inline constexpr int kZeroDeg = std::numeric_limits<int>::min();

/// Dense univariate polynomial over a finite field, always in canonical form
/// (no trailing zero coefficients). Immutable in spirit: operations return
/// new values.
class Poly {
 public:
  Poly() = default;
  Poly(Field k, std::vector<Fe> coeffs) : k_(std::move(k)), c_(std::move(coeffs)) { trim(); }

  static Poly zero(const Field& k) { return Poly(k, {}); }
  static Poly one(const Field& k) { return Poly(k, {k.one()}); }
  static Poly constant(const Field& k, Fe a) { return Poly(k, {a}); }
  /// The variable T.
  static Poly x(const Field& k) { return Poly(k, {k.zero(), k.one()}); }

  const Field& field() const { return k_; }
  const std::vector<Fe>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return c_.empty() ? kZeroDeg : static_cast<int>(c_.size()) - 1; }
  Fe coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  Fe lead() const { return c_.empty() ? 0 : c_.back(); }
  bool is_monic() const { return lead() == 1; }
  bool is_constant() const { return c_.size() <= 1; }

  bool operator==(const Poly& o) const { return c_ == o.c_; }
  bool operator!=(const Poly& o) const { return c_ != o.c_; }
  /// Lexicographic by degree then coefficients, for deterministic ordering.
  bool operator<(const Poly& o) const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(Fe s) const;
  Poly operator-() const;

  Fe eval(Fe x) const;
  Poly derivative() const;
  /// Scaled to leading coefficient 1 (zero stays zero).
  Poly monic() const;

  /// Maps coefficients through an embedding table into a larger field.
  Poly embed(const Field& big, const std::vector<Fe>& map) const;

  std::string to_string() const;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  Field k_;
  std::vector<Fe> c_;
};

/// (quotient, remainder) with deg r < deg b. Throws on zero divisor.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);

/// Monic gcd; gcd(f, 0) is the monic multiple of f.
Poly gcd(const Poly& a, const Poly& b);
bool coprime(const Poly& a, const Poly& b);

/// g = gcd (monic), plus s, t with s*a + t*b = g.
struct Egcd {
  Poly g, s, t;
};
Egcd egcd(const Poly& a, const Poly& b);

Poly powmod(const Poly& base, std::uint64_t k, const Poly& mod);
Poly mulmod(const Poly& a, const Poly& b, const Poly& mod);

/// Monic least common multiple.
Poly lcm(const Poly& a, const Poly& b);

/// The idx-th monic polynomial of degree d: lower coefficients are the base-q
/// digits of idx (coefficient of T^i = digit i), so enumeration order is the
/// integer order of the coefficient vector. idx ranges over [0, q^d).
Poly monic_by_index(const Field& k, unsigned d, std::uint64_t idx);
std::uint64_t monic_count(const Field& k, unsigned d);

/// All q^n polynomials of degree < n, by the same indexing.
Poly poly_below_degree_by_index(const Field& k, unsigned n, std::uint64_t idx);

bool is_irreducible(const Poly& f);

/// Trial-division factorization into (monic irreducible, multiplicity) pairs,
/// sorted. The leading coefficient is not part of the output.
std::vector<std::pair<Poly, int>> factor(const Poly& f);

/// All monic divisors of f, sorted; includes 1 and the monic multiple of f.
std::vector<Poly> monic_divisors(const Poly& f);

bool is_squarefree(const Poly& f);

/// Splitting data of a squarefree polynomial: the smallest extension of the
/// coefficient field containing all roots, the embedding table into it, and
/// the deg f distinct roots (sorted by element id).
struct SplittingRoots {
  Field ext;
  std::vector<Fe> embed;  // base-field element id -> ext element
  std::vector<Fe> roots;
};
SplittingRoots roots_in_extension(const Poly& f);

/// Text format used by the CLI: "GF(p^e): c0,c1,...,cd" with coefficients
/// low-to-high as element ids.
std::string poly_format(const Poly& f);
Poly poly_parse(const std::string& text);
Poly poly_parse(const Field& k, const std::string& coeff_list);

}  // namespace ffnt

#endif  // FFNT_POLY_HPP
