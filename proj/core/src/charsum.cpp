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

#include "ffnt/charsum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ffnt/parallel.hpp"

namespace ffnt {

IntervalSum char_sum(const Character& chi, const Poly& f, unsigned n) {
  const ResidueRing& ring = chi.ring();
  const Field& k = ring.field();
  IntervalSum out{CycloSum(chi.order_exponent()), 0.0, 0, 1};
  for (unsigned i = 0; i < n; ++i) out.interval *= k.order();
  for (std::uint64_t idx = 0; idx < out.interval; ++idx) {
    Poly h = poly_below_degree_by_index(k, n, idx);
    auto t = chi.eval_exponent(f + h);
    if (!t) continue;
    out.exact.add_root(*t);
    ++out.terms;
  }
  out.value = out.exact.value();
  return out;
}

std::uint64_t binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

SsBoundCheck check_ss_bound(const Character& chi, const Poly& f, unsigned n) {
  const ResidueRing& ring = chi.ring();
  if (!is_squarefree(ring.modulus()))
    throw std::invalid_argument("bound check needs a squarefree modulus");
  if (chi.is_trivial())
    throw std::invalid_argument("bound check needs a nontrivial character");
  const double q = double(ring.field().order());
  const unsigned m = ring.m();
  SsBoundCheck out;
  IntervalSum s = char_sum(chi, f, n);
  out.abs_sum = std::abs(s.value);
  out.trivial_bound = double(s.interval);
  std::uint64_t binom = (n <= m - 1) ? binomial(m - 1, n) : 0;
  out.binomial_zero = binom == 0;
  out.bound = (std::sqrt(q) + 1.0) * double(binom) * std::pow(q, n / 2.0);
  out.ratio = out.bound > 0 ? out.abs_sum / out.bound : 0.0;
  // Slack absorbs the float evaluation of the exact root-of-unity sum.
  out.within = out.abs_sum <= out.bound + 1e-9;
  return out;
}

namespace {

// Kernel basis of the D x D matrix over F_p given by its action on the unit
// vectors: cols[j] is the image of e_j. Plain mod-p Gaussian elimination.
std::vector<std::vector<std::uint32_t>> fp_kernel(std::uint32_t p,
                                                  std::vector<std::vector<std::uint32_t>> cols) {
  const std::size_t dim = cols.size();
  auto inv_mod = [p](std::uint32_t a) {
    std::uint32_t r = 1, b = a, e = p - 2;
    for (; e; e >>= 1, b = std::uint32_t(std::uint64_t(b) * b % p))
      if (e & 1) r = std::uint32_t(std::uint64_t(r) * b % p);
    return r;
  };
  // Row-reduce the matrix whose columns are cols (row r = entry r of each).
  std::vector<std::vector<std::uint32_t>> rows(dim, std::vector<std::uint32_t>(dim));
  for (std::size_t j = 0; j < dim; ++j)
    for (std::size_t r = 0; r < dim; ++r) rows[r][j] = cols[j][r];
  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < dim && rank < dim; ++col) {
    std::size_t piv = rank;
    while (piv < dim && rows[piv][col] == 0) ++piv;
    if (piv == dim) continue;
    std::swap(rows[rank], rows[piv]);
    std::uint32_t s = inv_mod(rows[rank][col]);
    for (std::size_t j = col; j < dim; ++j)
      rows[rank][j] = std::uint32_t(std::uint64_t(rows[rank][j]) * s % p);
    for (std::size_t r = 0; r < dim; ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      std::uint32_t c = rows[r][col];
      for (std::size_t j = col; j < dim; ++j)
        rows[r][j] = std::uint32_t((rows[r][j] + std::uint64_t(p - c) * rows[rank][j]) % p);
    }
    pivot_col.push_back(col);
    ++rank;
  }
  std::vector<char> is_pivot(dim, 0);
  for (std::size_t c : pivot_col) is_pivot[c] = 1;
  std::vector<std::vector<std::uint32_t>> kernel;
  for (std::size_t free_col = 0; free_col < dim; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<std::uint32_t> v(dim, 0);
    v[free_col] = 1;
    for (std::size_t r = 0; r < rank; ++r)
      v[pivot_col[r]] = (p - std::uint32_t(rows[r][free_col] % p)) % p;
    kernel.push_back(std::move(v));
  }
  return kernel;
}

}  // namespace

LangFiber lang_fiber(const ResidueRing& ring, const Poly& f, const Poly& h) {
  const Field& base = ring.field();
  const Poly& g = ring.modulus();
  const unsigned m = ring.m();
  Poly w = (f + h) % g;
  if (!coprime(w, g)) throw std::invalid_argument("f + h must be invertible mod g");

  LangFiber out;
  out.h = h;
  // e = multiplicative order of f + h, so Frob^e fixes the fiber pointwise
  // and the whole fiber lives over F_{q^e}.
  ResidueIdx wi = ring.index_of(w);
  ResidueIdx acc = wi;
  out.e = 1;
  while (acc != ring.one_idx()) {
    acc = ring.mul(acc, wi);
    ++out.e;
  }
  out.ext = Field::make(base.p(), base.e() * out.e);
  out.embed = out.ext.embedding(base);
  const Field& E = out.ext;
  Poly g_ext = g.embed(E, out.embed);
  Poly w_ext = w.embed(E, out.embed);
  const std::uint64_t q = base.order();

  // a -> a^{(q)} - a w mod g is F_p-linear on the coefficient space: both the
  // q-power map on each coefficient and multiplication by a fixed residue
  // are. Its kernel is exactly the solution set.
  const std::uint32_t p = base.p();
  const unsigned digits = E.e();
  const std::size_t dim = std::size_t(m) * digits;
  auto to_poly = [&](const std::vector<std::uint32_t>& v) {
    std::vector<Fe> c(m);
    for (unsigned i = 0; i < m; ++i) {
      std::vector<std::uint32_t> d(v.begin() + i * digits, v.begin() + (i + 1) * digits);
      c[i] = E.from_coords(d);
    }
    return Poly(E, std::move(c));
  };
  auto to_vec = [&](const Poly& a) {
    std::vector<std::uint32_t> v(dim, 0);
    for (unsigned i = 0; i < m; ++i) {
      std::vector<std::uint32_t> d = E.coords(a.coeff(i));
      std::copy(d.begin(), d.end(), v.begin() + i * digits);
    }
    return v;
  };
  std::vector<std::vector<std::uint32_t>> cols(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    std::vector<std::uint32_t> unit(dim, 0);
    unit[j] = 1;
    Poly a = to_poly(unit);
    std::vector<Fe> frob(m);
    for (unsigned i = 0; i < m; ++i) frob[i] = E.pow(a.coeff(i), q);
    Poly image = Poly(E, std::move(frob)) - mulmod(a, w_ext, g_ext);
    cols[j] = to_vec(image % g_ext);
  }
  auto kernel = fp_kernel(p, std::move(cols));

  std::uint64_t combos = 1;
  for (std::size_t i = 0; i < kernel.size(); ++i) {
    combos *= p;
    if (combos > (std::uint64_t(1) << 24))
      throw std::runtime_error("Lang kernel too large to enumerate");
  }
  for (std::uint64_t idx = 0; idx < combos; ++idx) {
    std::vector<std::uint32_t> v(dim, 0);
    std::uint64_t rest = idx;
    for (const auto& b : kernel) {
      std::uint32_t c = std::uint32_t(rest % p);
      rest /= p;
      if (c)
        for (std::size_t i = 0; i < dim; ++i) v[i] = (v[i] + std::uint64_t(c) * b[i]) % p;
    }
    Poly a = to_poly(v);
    if (coprime(a, g_ext)) out.solutions.push_back(a);
  }
  std::sort(out.solutions.begin(), out.solutions.end());
  return out;
}

TorsorReport verify_torsor(const ResidueRing& ring, const Poly& f, unsigned n) {
  const Field& base = ring.field();
  const Poly& g = ring.modulus();
  TorsorReport out;
  out.group_order = ring.structure().group_order;
  ring.units();  // materialize the lazy caches before the workers share them

  std::uint64_t space = 1;
  for (unsigned i = 0; i < n; ++i) space *= base.order();
  std::vector<Poly> hs;
  for (std::uint64_t idx = 0; idx < space; ++idx) {
    Poly h = poly_below_degree_by_index(base, n, idx);
    if (coprime(f + h, g)) hs.push_back(h);
  }

  auto run_one = [&](const Poly& h) {
    TorsorCheck c;
    c.h = h;
    LangFiber fib = lang_fiber(ring, f, h);
    const Field& E = fib.ext;
    Poly g_ext = g.embed(E, fib.embed);
    Poly w_ext = ((f + h) % g).embed(E, fib.embed);
    c.fiber_size = fib.solutions.size();
    c.size_ok = c.fiber_size == out.group_order;
    if (!fib.solutions.empty()) c.witness = fib.solutions.front();

    std::vector<Poly> sorted = fib.solutions;  // already sorted
    auto in_fiber = [&](const Poly& a) {
      return std::binary_search(sorted.begin(), sorted.end(), a);
    };
    // Units act by multiplication mod g: the action must be free (only the
    // identity fixes a point) and transitive (one orbit covers the fiber).
    c.action_ok = c.size_ok;
    for (ResidueIdx u : ring.units()) {
      Poly u_ext = ring.poly_of(u).embed(E, fib.embed);
      std::size_t moved = 0;
      for (const Poly& a : fib.solutions) {
        Poly ua = mulmod(u_ext, a, g_ext);
        if (!in_fiber(ua)) c.action_ok = false;
        if (ua != a) ++moved;
      }
      if (u != ring.one_idx() && moved != fib.solutions.size()) c.action_ok = false;
    }
    if (!fib.solutions.empty()) {
      std::vector<Poly> orbit;
      for (ResidueIdx u : ring.units())
        orbit.push_back(mulmod(ring.poly_of(u).embed(E, fib.embed), fib.solutions.front(), g_ext));
      std::sort(orbit.begin(), orbit.end());
      if (orbit != sorted) c.action_ok = false;
    }
    // Coefficient-wise q-th power on a fiber point equals multiplication by
    // f + h, recomputed with plain polynomial arithmetic.
    c.frobenius_ok = true;
    const std::uint64_t q = base.order();
    for (const Poly& a : fib.solutions) {
      std::vector<Fe> fc(a.coeffs().size());
      for (std::size_t i = 0; i < fc.size(); ++i) fc[i] = E.pow(a.coeffs()[i], q);
      if (Poly(E, std::move(fc)) % g_ext != mulmod(a, w_ext, g_ext)) c.frobenius_ok = false;
    }
    return c;
  };

  auto slices = parallel_map_ranges<std::vector<TorsorCheck>>(
      hs.size(), job_count(), [&](std::uint64_t lo, std::uint64_t hi) {
        std::vector<TorsorCheck> part;
        for (std::uint64_t i = lo; i < hi; ++i) part.push_back(run_one(hs[i]));
        return part;
      });
  out.pass = true;
  for (auto& s : slices)
    for (auto& c : s) {
      if (!(c.size_ok && c.action_ok && c.frobenius_ok)) out.pass = false;
      out.checks.push_back(std::move(c));
    }
  return out;
}

}  // namespace ffnt
