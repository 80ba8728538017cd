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

#ifndef FFNT_THETA_HPP
#define FFNT_THETA_HPP

#include <cstdint>
#include <vector>

#include "ffnt/poly.hpp"

namespace ffnt {

/// Imaginary hyperelliptic model y^2 = f(x) with f monic squarefree of
/// degree 2g+1 and odd characteristic: one point at infinity, which also
/// serves as the base point for the degree-a images inside the Jacobian.
class HyperellipticCurve {
 public:
  explicit HyperellipticCurve(Poly f);

  const Field& field() const { return f_.field(); }
  const Poly& f() const { return f_; }
  unsigned genus() const { return genus_; }

  /// Projective points over F_{q^r} (affine + the point at infinity).
  std::uint64_t count_points(unsigned r) const;

 private:
  Poly f_;
  unsigned genus_;
};

/// Reduced Mumford pair: u monic with deg u <= g, deg v < deg u, and
/// u | v^2 - f; represents the class [D - (deg u) infinity]. Identity (1, 0).
struct MumfordDivisor {
  Poly u, v;

  bool operator==(const MumfordDivisor& o) const { return u == o.u && v == o.v; }
  bool operator<(const MumfordDivisor& o) const { return u < o.u || (u == o.u && v < o.v); }
};

MumfordDivisor mumford_identity(const HyperellipticCurve& c);
MumfordDivisor mumford_negate(const HyperellipticCurve& c, const MumfordDivisor& d);
bool mumford_valid(const HyperellipticCurve& c, const MumfordDivisor& d);

/// Cantor's composition-and-reduction; throws on malformed inputs.
MumfordDivisor cantor_add(const HyperellipticCurve& c, const MumfordDivisor& a,
                          const MumfordDivisor& b);

/// Independent addition oracle for coprime supports: the chord construction.
/// With gcd(u1, u2) = 1, interpolate c = v1 mod u1, c = v2 mod u2 by CRT;
/// then u3 = monic((c^2 - f) / (u1 u2)) carries the residual intersection of
/// y = c(x) with the curve, and v3 = -c mod u3. Returns false (through ok)
/// when a reduction step leaves the coprime-support regime.
bool chord_add(const HyperellipticCurve& c, const MumfordDivisor& a, const MumfordDivisor& b,
               MumfordDivisor* out);

struct JacobianTable {
  std::vector<MumfordDivisor> elements;  // sorted
  std::uint64_t order() const { return elements.size(); }
  std::size_t index_of(const MumfordDivisor& d) const;
};

/// All reduced pairs over F_q by brute force; throws past the cap.
JacobianTable enumerate_jacobian(const HyperellipticCurve& c, std::uint64_t cap = 1000000);

/// |J(F_q)| predicted as P(1) from the zeta numerator fitted to the point
/// counts over F_q (genus 1) or F_q and F_{q^2} (genus 2).
std::uint64_t jacobian_order_from_zeta(const HyperellipticCurve& c);

/// c lies in the image of the a-fold sum of the curve iff its reduced
/// Mumford degree is at most a.
bool theta_membership(const MumfordDivisor& c, unsigned a);

/// Least n with c in the 2n-fold image: ceil(deg u / 2).
unsigned splitting_type(const MumfordDivisor& c);

/// #{c in J(F_q) : c in Theta_a and c - x in Theta_b}.
std::uint64_t theta_intersection_count(const HyperellipticCurve& c, const JacobianTable& jac,
                                       unsigned a, unsigned b, const MumfordDivisor& x);

struct EquidistributionRow {
  std::size_t x_index = 0;
  std::uint64_t count = 0;
  double expected = 0.0;  // |Theta_a| |Theta_b| / |J|
  double deviation = 0.0;
};

struct EquidistributionReport {
  std::uint64_t theta_a = 0, theta_b = 0, jacobian = 0;
  std::vector<EquidistributionRow> rows;  // one per x, in table order
  double max_deviation = 0.0;
  double rms_deviation = 0.0;
  bool double_count_ok = false;  // sum of counts = |Theta_a| |Theta_b|
};

/// Intersection counts against the product-measure prediction for every
/// translate x; deviations are reported, never asserted, since the
/// underlying equidistribution is a large-q limit statement.
EquidistributionReport equidistribution_report(const HyperellipticCurve& c,
                                               const JacobianTable& jac, unsigned a, unsigned b);

}  // namespace ffnt

#endif  // FFNT_THETA_HPP
