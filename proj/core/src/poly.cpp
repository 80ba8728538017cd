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

#include "ffnt/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ffnt {

bool Poly::operator<(const Poly& o) const {
  if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
  for (std::size_t i = c_.size(); i-- > 0;)
    if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
  return false;
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<Fe> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = k_.add(coeff(i), o.coeff(i));
  return Poly(k_, std::move(r));
}

Poly Poly::operator-(const Poly& o) const {
  std::vector<Fe> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = k_.sub(coeff(i), o.coeff(i));
  return Poly(k_, std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return zero(k_);
  std::vector<Fe> r(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      r[i + j] = k_.add(r[i + j], k_.mul(c_[i], o.c_[j]));
  }
  return Poly(k_, std::move(r));
}

Poly Poly::operator*(Fe s) const {
  std::vector<Fe> r(c_);
  for (auto& x : r) x = k_.mul(x, s);
  return Poly(k_, std::move(r));
}

Poly Poly::operator-() const {
  std::vector<Fe> r(c_);
  for (auto& x : r) x = k_.neg(x);
  return Poly(k_, std::move(r));
}

Fe Poly::eval(Fe x) const {
  Fe acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = k_.add(k_.mul(acc, x), c_[i]);
  return acc;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return zero(k_);
  std::vector<Fe> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i)
    r[i - 1] = k_.mul(c_[i], k_.from_int(static_cast<std::int64_t>(i)));
  return Poly(k_, std::move(r));
}

Poly Poly::monic() const {
  if (is_zero() || lead() == 1) return *this;
  return *this * k_.inv(lead());
}

Poly Poly::embed(const Field& big, const std::vector<Fe>& map) const {
  std::vector<Fe> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = map[c_[i]];
  return Poly(big, std::move(r));
}

std::string Poly::to_string() const { return poly_format(*this); }

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  const Field& k = a.field();
  std::vector<Fe> rem(a.coeffs());
  std::vector<Fe> quo;
  const int db = b.degree();
  if (a.degree() >= db) quo.assign(a.degree() - db + 1, 0);
  Fe lead_inv = k.inv(b.lead());
  while (static_cast<int>(rem.size()) - 1 >= db && !rem.empty()) {
    Fe c = k.mul(rem.back(), lead_inv);
    std::size_t d = rem.size() - 1 - db;
    quo[d] = c;
    for (int i = 0; i <= db; ++i)
      rem[d + i] = k.sub(rem[d + i], k.mul(c, b.coeff(i)));
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
  }
  return {Poly(k, std::move(quo)), Poly(k, std::move(rem))};
}

Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }
Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

bool coprime(const Poly& a, const Poly& b) {
  Poly g = gcd(a, b);
  return g.degree() == 0;
}

Egcd egcd(const Poly& a, const Poly& b) {
  const Field& k = a.field();
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::one(k), s1 = Poly::zero(k);
  Poly t0 = Poly::zero(k), t1 = Poly::one(k);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    Poly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (!r0.is_zero() && r0.lead() != 1) {
    Fe inv = k.inv(r0.lead());
    r0 = r0 * inv;
    s0 = s0 * inv;
    t0 = t0 * inv;
  }
  return {r0, s0, t0};
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& mod) { return (a * b) % mod; }

Poly powmod(const Poly& base, std::uint64_t k, const Poly& mod) {
  Poly r = Poly::one(base.field()) % mod;
  Poly b = base % mod;
  while (k) {
    if (k & 1) r = mulmod(r, b, mod);
    b = mulmod(b, b, mod);
    k >>= 1;
  }
  return r;
}

Poly lcm(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly::zero(a.field());
  return ((a * b) / gcd(a, b)).monic();
}

std::uint64_t monic_count(const Field& k, unsigned d) {
  std::uint64_t n = 1;
  for (unsigned i = 0; i < d; ++i) n *= k.order();
  return n;
}

Poly monic_by_index(const Field& k, unsigned d, std::uint64_t idx) {
  std::vector<Fe> c(d + 1, 0);
  for (unsigned i = 0; i < d; ++i) {
    c[i] = static_cast<Fe>(idx % k.order());
    idx /= k.order();
  }
  c[d] = k.one();
  return Poly(k, std::move(c));
}

Poly poly_below_degree_by_index(const Field& k, unsigned n, std::uint64_t idx) {
  std::vector<Fe> c(n, 0);
  for (unsigned i = 0; i < n; ++i) {
    c[i] = static_cast<Fe>(idx % k.order());
    idx /= k.order();
  }
  return Poly(k, std::move(c));
}

bool is_irreducible(const Poly& f) {
  if (f.degree() <= 0) return false;
  if (f.degree() == 1) return true;
  const Field& k = f.field();
  const unsigned half = static_cast<unsigned>(f.degree()) / 2;
  for (unsigned d = 1; d <= half; ++d)
    for (std::uint64_t i = 0; i < monic_count(k, d); ++i)
      if ((f % monic_by_index(k, d, i)).is_zero()) return false;
  return true;
}

std::vector<std::pair<Poly, int>> factor(const Poly& f) {
  if (f.is_zero()) throw std::domain_error("cannot factor the zero polynomial");
  const Field& k = f.field();
  std::vector<std::pair<Poly, int>> out;
  Poly rest = f.monic();
  // Trial division in increasing degree: any divisor found is irreducible
  // because all smaller-degree factors were already removed.
  for (unsigned d = 1; rest.degree() > 0; ++d) {
    if (static_cast<int>(d) > rest.degree() / 2) {
      out.emplace_back(rest, 1);
      break;
    }
    for (std::uint64_t i = 0; i < monic_count(k, d) && rest.degree() > 0; ++i) {
      Poly cand = monic_by_index(k, d, i);
      if (!(rest % cand).is_zero()) continue;
      int mult = 0;
      while ((rest % cand).is_zero()) {
        rest = rest / cand;
        ++mult;
      }
      out.emplace_back(cand, mult);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

std::vector<Poly> monic_divisors(const Poly& f) {
  auto fac = factor(f);
  std::vector<Poly> divs{Poly::one(f.field())};
  for (const auto& [pi, mult] : fac) {
    std::vector<Poly> next;
    Poly pw = Poly::one(f.field());
    for (int m = 0; m <= mult; ++m) {
      for (const auto& d : divs) next.push_back(d * pw);
      pw = pw * pi;
    }
    divs = std::move(next);
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

bool is_squarefree(const Poly& f) {
  if (f.is_zero()) throw std::domain_error("squarefreeness of the zero polynomial");
  if (f.degree() <= 0) return true;
  Poly d = f.derivative();
  if (d.is_zero()) return false;  // perfect p-th power in characteristic p
  return gcd(f, d).degree() == 0;
}

SplittingRoots roots_in_extension(const Poly& f) {
  if (f.is_zero() || f.degree() < 1)
    throw std::domain_error("roots_in_extension needs a nonconstant polynomial");
  if (!is_squarefree(f)) throw std::domain_error("roots_in_extension needs a squarefree input");
  const Field& k = f.field();
  auto fac = factor(f);
  std::uint64_t ext_deg = 1;
  for (const auto& [pi, mult] : fac) {
    (void)mult;
    ext_deg = std::lcm(ext_deg, static_cast<std::uint64_t>(pi.degree()));
  }
  SplittingRoots out{Field::make(k.p(), static_cast<std::uint32_t>(k.e() * ext_deg)), {}, {}};
  out.embed = out.ext.embedding(k);
  Poly fe = f.embed(out.ext, out.embed);
  for (std::uint64_t x = 0; x < out.ext.order(); ++x)
    if (fe.eval(static_cast<Fe>(x)) == 0) out.roots.push_back(static_cast<Fe>(x));
  if (out.roots.size() != static_cast<std::size_t>(f.degree()))
    throw std::logic_error("splitting field did not yield all roots");
  return out;
}

std::string poly_format(const Poly& f) {
  std::ostringstream os;
  os << "GF(" << f.field().p() << "^" << f.field().e() << "): ";
  if (f.is_zero()) {
    os << "0";
    return os.str();
  }
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (i) os << ",";
    os << f.coeffs()[i];
  }
  return os.str();
}

Poly poly_parse(const Field& k, const std::string& coeff_list) {
  std::vector<Fe> c;
  std::stringstream ss(coeff_list);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t pos = 0;
    long v = std::stol(tok, &pos);
    while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
    if (pos != tok.size()) throw std::invalid_argument("bad polynomial coefficient: " + tok);
    if (v < 0 || static_cast<std::uint64_t>(v) >= k.order())
      throw std::invalid_argument("coefficient out of field range: " + tok);
    c.push_back(static_cast<Fe>(v));
  }
  return Poly(k, std::move(c));
}

Poly poly_parse(const std::string& text) {
  // "GF(p^e): c0,c1,..."
  auto lp = text.find("GF(");
  auto caret = text.find('^');
  auto rp = text.find(')');
  auto colon = text.find(':');
  if (lp != 0 || caret == std::string::npos || rp == std::string::npos ||
      colon == std::string::npos || !(caret < rp && rp < colon))
    throw std::invalid_argument("bad polynomial text (want \"GF(p^e): c0,c1,...\"): " + text);
  std::uint32_t p = static_cast<std::uint32_t>(std::stoul(text.substr(3, caret - 3)));
  std::uint32_t e = static_cast<std::uint32_t>(std::stoul(text.substr(caret + 1, rp - caret - 1)));
  Field k = Field::make(p, e);
  return poly_parse(k, text.substr(colon + 1));
}

}  // namespace ffnt
