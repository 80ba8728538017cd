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

#include "ffnt/field.hpp"

#include <algorithm>
#include <numeric>

namespace ffnt {

namespace {

// Dense little-endian polynomials over F_p, used only while bootstrapping a
// field's tables.
using PPoly = std::vector<std::uint32_t>;

void ptrim(PPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

PPoly pmul(const PPoly& a, const PPoly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  PPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t(a[i]) * b[j]) % p);
  ptrim(r);
  return r;
}

std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
  std::uint32_t r = 1, b = a % p;
  for (std::uint32_t k = p - 2; k; k >>= 1) {
    if (k & 1) r = static_cast<std::uint32_t>(std::uint64_t(r) * b % p);
    b = static_cast<std::uint32_t>(std::uint64_t(b) * b % p);
  }
  return r;
}

PPoly pmod(PPoly a, const PPoly& b, std::uint32_t p) {
  ptrim(a);
  std::uint32_t inv = inv_mod_p(b.back(), p);
  while (a.size() >= b.size() && !a.empty()) {
    std::uint32_t c = static_cast<std::uint32_t>(std::uint64_t(a.back()) * inv % p);
    std::size_t d = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      std::uint64_t t = std::uint64_t(c) * b[i] % p;
      a[d + i] = static_cast<std::uint32_t>((a[d + i] + p - t) % p);
    }
    ptrim(a);
  }
  return a;
}

bool pgcd_is_one(PPoly a, PPoly b, std::uint32_t p) {
  ptrim(a);
  ptrim(b);
  while (!b.empty()) {
    PPoly r = pmod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a.size() == 1;
}

// x^(p^k) mod f, by repeated p-th powering.
PPoly x_pow_p_tower(const PPoly& f, std::uint32_t p, std::uint32_t k) {
  PPoly x = pmod(PPoly{0, 1}, f, p);
  for (std::uint32_t i = 0; i < k; ++i) {
    // x <- x^p mod f
    PPoly r{1};
    PPoly b = x;
    std::uint32_t n = p;
    while (n) {
      if (n & 1) r = pmod(pmul(r, b, p), f, p);
      b = pmod(pmul(b, b, p), f, p);
      n >>= 1;
    }
    x = r;
  }
  return x;
}

bool is_irreducible_over_fp(const PPoly& f, std::uint32_t p) {
  const std::uint32_t e = static_cast<std::uint32_t>(f.size()) - 1;
  if (e == 1) return true;
  // x^(p^e) == x mod f, and x^(p^(e/r)) != x for every prime r | e.
  PPoly x = pmod(PPoly{0, 1}, f, p);
  if (x_pow_p_tower(f, p, e) != x) return false;
  for (auto [r, mult] : factor_u64(e)) {
    (void)mult;
    PPoly y = x_pow_p_tower(f, p, e / static_cast<std::uint32_t>(r));
    PPoly diff = y;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    ptrim(diff);
    // diff == 0 means every factor of f has degree dividing e/r.
    if (diff.empty() || !pgcd_is_one(diff, f, p)) return false;
  }
  return true;
}

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factor_u64(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    unsigned m = 0;
    while (n % d == 0) {
      n /= d;
      ++m;
    }
    out.emplace_back(d, m);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

Field Field::make(std::uint32_t p, std::uint32_t e) {
  if (!is_prime_u64(p)) throw std::invalid_argument("field characteristic must be prime");
  if (e < 1) throw std::invalid_argument("extension degree must be >= 1");
  std::uint64_t n = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    n *= p;
    if (n > kMaxOrder) throw std::invalid_argument("field order exceeds table cap");
  }

  auto d = std::make_shared<Data>();
  d->p = p;
  d->e = e;
  d->n = n;

  if (e == 1) {
    d->mod = {0, 1};  // identity modulus: the polynomial T
  } else {
    // Least monic irreducible of degree e, scanning lower coefficients as a
    // base-p integer.
    for (std::uint64_t idx = 0;; ++idx) {
      PPoly f(e + 1, 0);
      std::uint64_t t = idx;
      for (std::uint32_t i = 0; i < e; ++i) {
        f[i] = static_cast<std::uint32_t>(t % p);
        t /= p;
      }
      f[e] = 1;
      if (is_irreducible_over_fp(f, p)) {
        d->mod = f;
        break;
      }
    }
  }

  // Element arithmetic in digit form, used to fill the tables.
  auto unpack = [&](Fe a) {
    PPoly c(e, 0);
    for (std::uint32_t i = 0; i < e; ++i) {
      c[i] = static_cast<std::uint32_t>(a % p);
      a = static_cast<Fe>(a / p);
    }
    return c;
  };
  auto pack = [&](const PPoly& c) {
    std::uint64_t id = 0;
    for (std::size_t i = c.size(); i-- > 0;) id = id * p + c[i];
    return static_cast<Fe>(id);
  };
  auto raw_mul = [&](Fe a, Fe b) {
    if (e == 1) return static_cast<Fe>(std::uint64_t(a) * b % p);
    return pack(pmod(pmul(unpack(a), unpack(b), p), d->mod, p));
  };

  d->unit_order_factors = factor_u64(n - 1);

  // Find a multiplicative generator, then build exp/log.
  auto raw_pow = [&](Fe a, std::uint64_t k) {
    Fe r = 1, b = a;
    while (k) {
      if (k & 1) r = raw_mul(r, b);
      b = raw_mul(b, b);
      k >>= 1;
    }
    return r;
  };
  Fe g = 0;
  for (Fe cand = 1; cand < n; ++cand) {
    bool ok = true;
    for (auto [r, mult] : d->unit_order_factors) {
      (void)mult;
      if (raw_pow(cand, (n - 1) / r) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) {
      g = cand;
      break;
    }
  }

  d->exp.resize(n - 1);
  d->log.assign(n, 0);
  Fe cur = 1;
  for (std::uint64_t k = 0; k < n - 1; ++k) {
    d->exp[k] = cur;
    d->log[cur] = k;
    cur = raw_mul(cur, g);
  }

  return Field(std::move(d));
}

Fe Field::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(d_->p);
  if (r < 0) r += d_->p;
  return static_cast<Fe>(r);
}

Fe Field::add(Fe a, Fe b) const {
  const std::uint32_t p = d_->p;
  if (d_->e == 1) {
    std::uint32_t s = a + b;
    return s >= p ? s - p : s;
  }
  Fe r = 0;
  std::uint64_t mult = 1;
  for (std::uint32_t i = 0; i < d_->e; ++i) {
    std::uint32_t s = a % p + b % p;
    if (s >= p) s -= p;
    r += static_cast<Fe>(s * mult);
    a /= p;
    b /= p;
    mult *= p;
  }
  return r;
}

Fe Field::sub(Fe a, Fe b) const {
  const std::uint32_t p = d_->p;
  if (d_->e == 1) {
    return a >= b ? a - b : a + p - b;
  }
  Fe r = 0;
  std::uint64_t mult = 1;
  for (std::uint32_t i = 0; i < d_->e; ++i) {
    std::uint32_t x = a % p, y = b % p;
    r += static_cast<Fe>((x >= y ? x - y : x + p - y) * mult);
    a /= p;
    b /= p;
    mult *= p;
  }
  return r;
}

Fe Field::pow(Fe a, std::uint64_t k) const {
  if (a == 0) return k == 0 ? 1 : 0;
  std::uint64_t g = d_->n - 1;
  return d_->exp[static_cast<std::uint64_t>((__uint128_t(d_->log[a]) * (k % g)) % g)];
}

bool Field::is_square(Fe a) const {
  if (a == 0) return true;
  if (d_->p == 2) return true;
  return d_->log[a] % 2 == 0;
}

std::uint64_t Field::mult_order(Fe a) const {
  if (a == 0) throw std::domain_error("multiplicative order of zero");
  std::uint64_t ord = d_->n - 1;
  std::uint64_t l = d_->log[a];
  std::uint64_t g = std::gcd(ord, l);
  return ord / (g == 0 ? ord : g);
}

std::vector<std::uint32_t> Field::coords(Fe a) const {
  std::vector<std::uint32_t> c(d_->e);
  for (std::uint32_t i = 0; i < d_->e; ++i) {
    c[i] = a % d_->p;
    a /= d_->p;
  }
  return c;
}

Fe Field::from_coords(const std::vector<std::uint32_t>& c) const {
  std::uint64_t id = 0;
  for (std::size_t i = c.size(); i-- > 0;) id = id * d_->p + c[i] % d_->p;
  return static_cast<Fe>(id);
}

std::vector<Fe> Field::embedding(const Field& sub) const {
  if (sub.p() != p() || e() % sub.e() != 0)
    throw std::invalid_argument("no embedding: incompatible fields");
  // Least root of the subfield modulus in this field.
  Fe root = 0;
  bool found = false;
  const auto& m = sub.modulus();
  for (std::uint64_t x = 0; x < order(); ++x) {
    Fe acc = 0;
    for (std::size_t i = m.size(); i-- > 0;) acc = add(mul(acc, static_cast<Fe>(x)), from_int(m[i]));
    if (acc == 0) {
      root = static_cast<Fe>(x);
      found = true;
      break;
    }
  }
  if (!found) throw std::logic_error("embedding root not found");
  std::vector<Fe> map(sub.order());
  for (std::uint64_t a = 0; a < sub.order(); ++a) {
    auto c = sub.coords(static_cast<Fe>(a));
    Fe acc = 0;
    for (std::size_t i = c.size(); i-- > 0;) acc = add(mul(acc, root), from_int(c[i]));
    map[a] = acc;
  }
  return map;
}

std::string Field::name() const {
  return "GF(" + std::to_string(p()) + "^" + std::to_string(e()) + ")";
}

}  // namespace ffnt
