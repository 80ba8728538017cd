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

#include "ffnt/families.hpp"

#include <stdexcept>
#include <unordered_set>

namespace ffnt {

namespace {

struct Ext {
  Field E;
  Fe t = 0;  // the parameter, embedded
  // sqrt_count[c] = number of y in E with y^2 = c.
  std::vector<std::uint32_t> sqrt_count;
};

Ext lift(const Field& base, Fe t, unsigned r) {
  Ext out;
  out.E = (r == 1) ? base : Field::make(base.p(), base.e() * r);
  out.t = (r == 1) ? t : out.E.embedding(base)[t];
  out.sqrt_count.assign(out.E.order(), 0);
  for (std::uint64_t y = 0; y < out.E.order(); ++y)
    ++out.sqrt_count[out.E.mul(Fe(y), Fe(y))];
  return out;
}

Fe cubic_rhs(const Field& E, Fe x, Fe t) {
  Fe x2 = E.mul(x, x);
  return E.add(E.add(E.mul(x2, x), x2), t);
}

}  // namespace

FamilyCount count_family(FamilyKind kind, const Field& base, Fe t, unsigned r) {
  Ext ex = lift(base, t, r);
  const Field& E = ex.E;
  FamilyCount out;
  if (kind == FamilyKind::kConic) {
    for (std::uint64_t x = 0; x < E.order(); ++x)
      out.affine += ex.sqrt_count[E.add(E.mul(Fe(x), Fe(x)), ex.t)];
    // At infinity the closure Y^2 = X^2 + t Z^2 cuts out Y^2 = X^2; with
    // X = 1 that is one projective point per square root of 1.
    out.projective = out.affine + ex.sqrt_count[E.one()];
  } else {
    for (std::uint64_t x = 0; x < E.order(); ++x)
      out.affine += ex.sqrt_count[cubic_rhs(E, Fe(x), ex.t)];
    out.projective = out.affine + 1;  // the Weierstrass point at infinity
  }
  return out;
}

std::vector<Fe> singular_parameters(FamilyKind kind, const Field& base) {
  if (kind == FamilyKind::kCubic && base.p() == 2)
    throw std::invalid_argument("the cubic family needs odd characteristic");
  std::vector<Fe> out;
  Fe two = base.add(base.one(), base.one());
  Fe three = base.add(two, base.one());
  for (std::uint64_t ti = 0; ti < base.order(); ++ti) {
    Fe t = Fe(ti);
    bool singular = false;
    for (std::uint64_t xi = 0; xi < base.order() && !singular; ++xi) {
      Fe x = Fe(xi);
      for (std::uint64_t yi = 0; yi < base.order() && !singular; ++yi) {
        Fe y = Fe(yi);
        if (kind == FamilyKind::kConic) {
          // F = y^2 - x^2 - t, dF = (-2x, 2y)
          Fe on = base.sub(base.mul(y, y), base.add(base.mul(x, x), t));
          singular = on == 0 && base.mul(two, x) == 0 && base.mul(two, y) == 0;
        } else {
          // F = y^2 - x^3 - x^2 - t, dF = (-(3x^2 + 2x), 2y)
          Fe on = base.sub(base.mul(y, y), cubic_rhs(base, x, t));
          Fe fx = base.add(base.mul(three, base.mul(x, x)), base.mul(two, x));
          singular = on == 0 && fx == 0 && base.mul(two, y) == 0;
        }
      }
    }
    if (singular) out.push_back(t);
  }
  return out;
}

ZetaConsistency zeta_consistency(FamilyKind kind, const Field& base, Fe t, unsigned depth) {
  if (depth == 0) throw std::invalid_argument("depth must be positive");
  ZetaConsistency out;
  for (unsigned r = 1; r <= depth; ++r)
    out.counts.push_back(count_family(kind, base, t, r).projective);
  const std::int64_t q = std::int64_t(base.order());
  out.trace = q + 1 - std::int64_t(out.counts[0]);
  std::int64_t s_prev = 2, s = out.trace;
  std::int64_t qr = q;
  for (unsigned r = 1; r <= depth; ++r) {
    out.predicted.push_back(std::uint64_t(qr + 1 - s));
    std::int64_t s_next = out.trace * s - q * s_prev;
    s_prev = s;
    s = s_next;
    qr *= q;
  }
  for (unsigned r = 0; r < depth; ++r) {
    std::uint64_t dev = out.counts[r] > out.predicted[r] ? out.counts[r] - out.predicted[r]
                                                         : out.predicted[r] - out.counts[r];
    out.max_deviation = std::max(out.max_deviation, dev);
  }
  out.pass = out.max_deviation == 0;
  return out;
}

NodeParamCheck node_parameterization_check(const Field& base, unsigned r) {
  Ext ex = lift(base, 0, r);
  const Field& E = ex.E;
  NodeParamCheck out;
  std::unordered_set<std::uint64_t> curve, image;
  for (std::uint64_t xi = 0; xi < E.order(); ++xi)
    for (std::uint64_t yi = 0; yi < E.order(); ++yi) {
      Fe x = Fe(xi), y = Fe(yi);
      if (E.mul(y, y) == cubic_rhs(E, x, E.zero())) curve.insert(xi * E.order() + yi);
    }
  out.affine = curve.size();
  for (std::uint64_t wi = 0; wi < E.order(); ++wi) {
    Fe w = Fe(wi);
    Fe x = E.sub(E.mul(w, w), E.one());
    Fe y = E.mul(w, x);
    image.insert(std::uint64_t(x) * E.order() + y);
    if (x == 0 && y == 0) ++out.node_preimages;
  }
  out.parameterized = image.size();
  // Pass means: the map covers the affine curve exactly, and it is injective
  // off the node, so the image size is q^r minus the collapsed preimages.
  out.pass = image == curve &&
             out.parameterized + out.node_preimages == E.order() + 1;
  return out;
}

}  // namespace ffnt
