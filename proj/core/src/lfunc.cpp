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

#include "ffnt/lfunc.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ffnt {

CycloSum char_coefficient(const Character& chi, unsigned d) {
  const ResidueRing& ring = chi.ring();
  const Field& k = ring.field();
  CycloSum sum(chi.order_exponent());
  for (std::uint64_t i = 0; i < monic_count(k, d); ++i) {
    auto e = chi.eval_exponent(monic_by_index(k, d, i));
    if (e) sum.add_root(*e);
  }
  return sum;
}

LPolynomial::LPolynomial(Character chi) : chi_(std::move(chi)) {
  if (chi_.is_trivial())
    throw std::invalid_argument("L(chi,u) is a polynomial only for nontrivial chi");
  const unsigned m = chi_.ring().m();
  coeffs_.reserve(m);
  for (unsigned d = 0; d < m; ++d) coeffs_.push_back(char_coefficient(chi_, d));
  CycloSum guard = char_coefficient(chi_, m);
  if (!guard.is_zero_exact())
    throw std::logic_error("degree guard failed: c_m(chi) != 0 for nontrivial chi");
}

int LPolynomial::degree() const {
  int d = static_cast<int>(coeffs_.size()) - 1;
  while (d > 0 && coeffs_[d].is_zero_exact()) --d;
  return d;
}

std::vector<std::complex<double>> LPolynomial::complex_coeffs() const {
  std::vector<std::complex<double>> c;
  c.reserve(coeffs_.size());
  for (const auto& s : coeffs_) c.push_back(s.value());
  return c;
}

std::complex<double> LPolynomial::eval(std::complex<double> u) const {
  std::complex<double> acc{0.0, 0.0};
  auto c = complex_coeffs();
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * u + c[i];
  return acc;
}

std::vector<std::complex<double>> complex_roots(std::vector<std::complex<double>> coeffs,
                                                bool* converged) {
  if (converged) *converged = true;
  while (coeffs.size() > 1 && std::abs(coeffs.back()) == 0.0) coeffs.pop_back();
  const std::size_t deg = coeffs.size() - 1;
  if (deg == 0) return {};
  // Normalize monic.
  for (auto& c : coeffs) c /= coeffs[deg];

  std::vector<std::complex<double>> z(deg);
  std::complex<double> seed{0.4, 0.9};
  z[0] = seed;
  for (std::size_t i = 1; i < deg; ++i) z[i] = z[i - 1] * seed;

  auto eval = [&](std::complex<double> u) {
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * u + coeffs[i];
    return acc;
  };

  // Repeated roots stall the per-step correction around sqrt(eps), so accept
  // a looser final correction after the full iteration budget.
  double worst = 0.0;
  for (int iter = 0; iter < 3000; ++iter) {
    worst = 0.0;
    for (std::size_t i = 0; i < deg; ++i) {
      std::complex<double> denom{1.0, 0.0};
      for (std::size_t j = 0; j < deg; ++j)
        if (j != i) denom *= z[i] - z[j];
      std::complex<double> delta = eval(z[i]) / denom;
      z[i] -= delta;
      worst = std::max(worst, std::abs(delta));
    }
    if (worst < 1e-13) break;
  }
  if (worst >= 1e-7 && converged) *converged = false;
  return z;
}

RhReport check_rh(const LPolynomial& l, double tol) {
  RhReport rep;
  auto coeffs = l.complex_coeffs();
  // Exact trim so numerically tiny top coefficients do not masquerade as
  // extra roots.
  coeffs.resize(static_cast<std::size_t>(l.degree()) + 1);
  bool conv = true;
  auto roots = complex_roots(coeffs, &conv);
  rep.converged = conv;
  if (!conv) return rep;
  const double sq = std::sqrt(static_cast<double>(l.character().ring().field().order()));
  for (auto r : roots) {
    double mod = 1.0 / std::abs(r);
    rep.reciprocal_root_moduli.push_back(mod);
    rep.max_deviation = std::max(rep.max_deviation, std::abs(mod - sq));
  }
  std::sort(rep.reciprocal_root_moduli.begin(), rep.reciprocal_root_moduli.end());
  (void)tol;
  return rep;
}

MomentReport moment_direct(const ResidueRing& ring, std::complex<double> u, unsigned k,
                           Population population) {
  if (k < 1) throw std::invalid_argument("moment order k must be >= 1");
  MomentReport rep;
  rep.population = population;
  rep.group_order = ring.structure().group_order;
  double acc = 0.0;
  for (const Character& chi : characters(ring)) {
    if (chi.is_trivial()) continue;
    if (population == Population::kPrimitiveOdd && !(is_primitive(chi) && is_odd(chi))) continue;
    LPolynomial l(chi);
    double a = std::abs(l.eval(u));
    acc += std::pow(a, 2.0 * k);
    ++rep.selected;
  }
  rep.value = acc / static_cast<double>(rep.group_order);
  return rep;
}

}  // namespace ffnt
