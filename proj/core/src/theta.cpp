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

#include "ffnt/theta.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ffnt/parallel.hpp"

namespace ffnt {

HyperellipticCurve::HyperellipticCurve(Poly f) : f_(std::move(f)) {
  if (f_.field().p() == 2)
    throw std::invalid_argument("y^2 = f(x) needs odd characteristic");
  if (!f_.is_monic() || f_.degree() < 3 || f_.degree() % 2 == 0)
    throw std::invalid_argument("f must be monic of odd degree >= 3");
  if (!is_squarefree(f_)) throw std::invalid_argument("f must be squarefree");
  genus_ = unsigned(f_.degree() - 1) / 2;
}

std::uint64_t HyperellipticCurve::count_points(unsigned r) const {
  const Field& base = f_.field();
  Field E = (r == 1) ? base : Field::make(base.p(), base.e() * r);
  Poly fe = (r == 1) ? f_ : f_.embed(E, E.embedding(base));
  std::vector<std::uint32_t> sqrt_count(E.order(), 0);
  for (std::uint64_t y = 0; y < E.order(); ++y) ++sqrt_count[E.mul(Fe(y), Fe(y))];
  std::uint64_t n = 1;  // the point at infinity
  for (std::uint64_t x = 0; x < E.order(); ++x) n += sqrt_count[fe.eval(Fe(x))];
  return n;
}

MumfordDivisor mumford_identity(const HyperellipticCurve& c) {
  return {Poly::one(c.field()), Poly::zero(c.field())};
}

MumfordDivisor mumford_negate(const HyperellipticCurve& c, const MumfordDivisor& d) {
  (void)c;
  return {d.u, d.u.is_constant() ? Poly::zero(d.u.field()) : (-d.v) % d.u};
}

bool mumford_valid(const HyperellipticCurve& c, const MumfordDivisor& d) {
  if (!d.u.is_monic() || d.u.degree() > int(c.genus())) return false;
  if (!d.v.is_zero() && d.v.degree() >= d.u.degree()) return false;
  return (d.v * d.v - c.f()) % d.u == Poly::zero(c.field());
}

namespace {

// Shrinks a semi-reduced pair until deg u <= g: u' = monic((f - v^2)/u),
// v' = -v mod u'.
MumfordDivisor reduce(const HyperellipticCurve& c, Poly u, Poly v) {
  while (u.degree() > int(c.genus())) {
    auto [q, rem] = divmod(c.f() - v * v, u);
    if (!rem.is_zero()) throw std::logic_error("reduction lost exact divisibility");
    u = q.monic();
    v = u.is_constant() ? Poly::zero(u.field()) : (-v) % u;
  }
  return {u.monic(), v};
}

}  // namespace

MumfordDivisor cantor_add(const HyperellipticCurve& c, const MumfordDivisor& a,
                          const MumfordDivisor& b) {
  if (!mumford_valid(c, a) || !mumford_valid(c, b))
    throw std::invalid_argument("u must divide v^2 - f with deg v < deg u <= g");
  const Field& k = c.field();
  // Composition: d = gcd(u1, u2, v1 + v2) = s1 u1 + s2 u2 + s3 (v1 + v2).
  Egcd e1 = egcd(a.u, b.u);
  Egcd e2 = egcd(e1.g, a.v + b.v);
  Poly d = e2.g;
  Poly s1 = e2.s * e1.s, s2 = e2.s * e1.t, s3 = e2.t;
  Poly u = (a.u * b.u) / (d * d);
  Poly num = s1 * a.u * b.v + s2 * b.u * a.v + s3 * (a.v * b.v + c.f());
  auto [v0, rem] = divmod(num, d);
  if (!rem.is_zero()) throw std::logic_error("composition lost exact divisibility");
  Poly v = u.is_constant() ? Poly::zero(k) : v0 % u;
  return reduce(c, u.monic(), v);
}

bool chord_add(const HyperellipticCurve& c, const MumfordDivisor& a, const MumfordDivisor& b,
               MumfordDivisor* out) {
  if (!coprime(a.u, b.u)) return false;
  const Field& k = c.field();
  // The curve y = c(x) through both supports: c = v1 mod u1, c = v2 mod u2.
  Egcd e = egcd(a.u, b.u);  // s u1 + t u2 = 1
  Poly prod = a.u * b.u;
  Poly chord = (a.v * e.t * b.u + b.v * e.s * a.u) % prod;
  // The remaining intersection of that curve with y^2 = f(x).
  auto [quot, rem] = divmod(chord * chord - c.f(), prod);
  if (!rem.is_zero()) return false;
  Poly u3 = quot.monic();
  Poly v3 = u3.is_constant() ? Poly::zero(k) : (-chord) % u3;
  *out = reduce(c, u3, v3);
  return true;
}

std::size_t JacobianTable::index_of(const MumfordDivisor& d) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), d);
  if (it == elements.end() || !(*it == d)) throw std::out_of_range("divisor not in table");
  return std::size_t(it - elements.begin());
}

JacobianTable enumerate_jacobian(const HyperellipticCurve& c, std::uint64_t cap) {
  const Field& k = c.field();
  std::uint64_t space = 0, block = 1;
  for (unsigned d = 0; d <= c.genus(); ++d, block *= k.order() * k.order()) space += block;
  if (space > cap) throw std::runtime_error("Jacobian candidate space exceeds the cap");

  JacobianTable jac;
  for (unsigned d = 0; d <= c.genus(); ++d) {
    for (std::uint64_t ui = 0; ui < monic_count(k, d); ++ui) {
      Poly u = monic_by_index(k, d, ui);
      std::uint64_t vspace = 1;
      for (unsigned i = 0; i < d; ++i) vspace *= k.order();
      for (std::uint64_t vi = 0; vi < vspace; ++vi) {
        Poly v = poly_below_degree_by_index(k, d, vi);
        if ((v * v - c.f()) % u == Poly::zero(k)) jac.elements.push_back({u, v});
      }
    }
  }
  std::sort(jac.elements.begin(), jac.elements.end());
  return jac;
}

std::uint64_t jacobian_order_from_zeta(const HyperellipticCurve& c) {
  const std::int64_t q = std::int64_t(c.field().order());
  const std::int64_t p1 = q + 1 - std::int64_t(c.count_points(1));
  if (c.genus() == 1) return std::uint64_t(1 - p1 + q);
  if (c.genus() == 2) {
    // Newton's identities on the Frobenius eigenvalues, with the functional
    // equation supplying the top elementary symmetric functions.
    const std::int64_t p2 = q * q + 1 - std::int64_t(c.count_points(2));
    const std::int64_t e1 = p1, e2 = (p1 * p1 - p2) / 2;
    return std::uint64_t(1 - e1 + e2 - q * e1 + q * q);
  }
  throw std::invalid_argument("zeta fit implemented for genus 1 and 2");
}

bool theta_membership(const MumfordDivisor& c, unsigned a) {
  return c.u.degree() <= int(a);
}

unsigned splitting_type(const MumfordDivisor& c) {
  return (unsigned(c.u.degree()) + 1) / 2;
}

std::uint64_t theta_intersection_count(const HyperellipticCurve& c, const JacobianTable& jac,
                                       unsigned a, unsigned b, const MumfordDivisor& x) {
  MumfordDivisor minus_x = mumford_negate(c, x);
  std::uint64_t n = 0;
  for (const MumfordDivisor& d : jac.elements)
    if (theta_membership(d, a) && theta_membership(cantor_add(c, d, minus_x), b)) ++n;
  return n;
}

EquidistributionReport equidistribution_report(const HyperellipticCurve& c,
                                               const JacobianTable& jac, unsigned a, unsigned b) {
  EquidistributionReport out;
  out.jacobian = jac.order();
  for (const MumfordDivisor& d : jac.elements) {
    if (theta_membership(d, a)) ++out.theta_a;
    if (theta_membership(d, b)) ++out.theta_b;
  }
  const double expected = double(out.theta_a) * double(out.theta_b) / double(out.jacobian);

  auto slices = parallel_map_ranges<std::vector<std::uint64_t>>(
      jac.order(), job_count(), [&](std::uint64_t lo, std::uint64_t hi) {
        std::vector<std::uint64_t> part;
        for (std::uint64_t i = lo; i < hi; ++i)
          part.push_back(theta_intersection_count(c, jac, a, b, jac.elements[i]));
        return part;
      });
  std::uint64_t total = 0;
  double sq = 0.0;
  std::size_t x_index = 0;
  for (const auto& s : slices)
    for (std::uint64_t n : s) {
      double dev = std::abs(double(n) - expected);
      out.rows.push_back({x_index++, n, expected, dev});
      out.max_deviation = std::max(out.max_deviation, dev);
      sq += dev * dev;
      total += n;
    }
  out.rms_deviation = std::sqrt(sq / double(out.jacobian));
  out.double_count_ok = total == out.theta_a * out.theta_b;
  return out;
}

}  // namespace ffnt
