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

#include "ffnt/residue.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace ffnt {

namespace {

constexpr double kTau = 6.283185307179586476925286766559;

// Generic cyclic decomposition of a small abelian group given by element list
// and multiplication, via Sylow splitting plus recursive max-order peeling.
struct GroupView {
  std::vector<ResidueIdx> elems;  // sorted
  std::function<ResidueIdx(ResidueIdx, ResidueIdx)> mul;
  ResidueIdx id;
};

ResidueIdx gpow(const GroupView& g, ResidueIdx a, std::uint64_t k) {
  ResidueIdx r = g.id, b = a;
  while (k) {
    if (k & 1) r = g.mul(r, b);
    b = g.mul(b, b);
    k >>= 1;
  }
  return r;
}

std::uint64_t gorder(const GroupView& g, ResidueIdx a) {
  ResidueIdx x = a;
  std::uint64_t k = 1;
  while (x != g.id) {
    x = g.mul(x, a);
    ++k;
  }
  return k;
}

// Basis of an abelian p-group: peel an element of maximal order, recurse on
// the quotient by its cyclic span, and correct lifted generators so their
// order in the group matches their order in the quotient.
void p_group_basis(const GroupView& g, std::vector<ResidueIdx>& gens,
                   std::vector<std::uint64_t>& orders) {
  if (g.elems.size() == 1) return;

  ResidueIdx top = g.id;
  std::uint64_t top_ord = 1;
  for (ResidueIdx a : g.elems) {
    std::uint64_t o = gorder(g, a);
    if (o > top_ord || (o == top_ord && a < top)) {
      top_ord = o;
      top = a;
    }
  }
  gens.push_back(top);
  orders.push_back(top_ord);
  if (top_ord == g.elems.size()) return;

  // Span of top, and discrete logs within it.
  std::map<ResidueIdx, std::uint64_t> span_log;
  {
    ResidueIdx x = g.id;
    for (std::uint64_t k = 0; k < top_ord; ++k) {
      span_log[x] = k;
      x = g.mul(x, top);
    }
  }

  // Quotient by <top>: canonical representative = least element of the coset.
  std::map<ResidueIdx, ResidueIdx> canon;
  for (ResidueIdx a : g.elems) {
    if (canon.count(a)) continue;
    std::vector<ResidueIdx> coset;
    ResidueIdx x = a;
    for (std::uint64_t k = 0; k < top_ord; ++k) {
      coset.push_back(x);
      x = g.mul(x, top);
    }
    ResidueIdx rep = *std::min_element(coset.begin(), coset.end());
    for (ResidueIdx c : coset) canon[c] = rep;
  }
  GroupView q;
  {
    std::set<ResidueIdx> reps;
    for (auto& [a, rep] : canon) reps.insert(rep);
    q.elems.assign(reps.begin(), reps.end());
  }
  auto canon_map = std::make_shared<std::map<ResidueIdx, ResidueIdx>>(std::move(canon));
  auto base_mul = g.mul;
  q.mul = [canon_map, base_mul](ResidueIdx a, ResidueIdx b) {
    return canon_map->at(base_mul(a, b));
  };
  q.id = canon_map->at(g.id);

  std::vector<ResidueIdx> qgens;
  std::vector<std::uint64_t> qorders;
  p_group_basis(q, qgens, qorders);

  for (std::size_t j = 0; j < qgens.size(); ++j) {
    ResidueIdx y = qgens[j];
    std::uint64_t k = qorders[j];
    // y^k lies in <top>; in a p-group with top of maximal order the log is
    // divisible by k, so we can shift y into an element of true order k.
    std::uint64_t t = span_log.at(gpow(g, y, k));
    if (t % k != 0) throw std::logic_error("p-group basis lift failed");
    std::uint64_t shift = (top_ord - (t / k) % top_ord) % top_ord;
    gens.push_back(g.mul(y, gpow(g, top, shift)));
    orders.push_back(k);
  }
}

}  // namespace

ResidueRing::ResidueRing(Field k, Poly g, std::uint64_t enumeration_cap) {
  if (!g.is_monic() || g.degree() < 1)
    throw std::invalid_argument("residue ring modulus must be monic and nonconstant");
  if (!g.field().same(k)) throw std::invalid_argument("modulus field mismatch");
  auto d = std::make_shared<Data>(Data{std::move(k), std::move(g), 0, 0, enumeration_cap, {}, nullptr});
  d->m = static_cast<unsigned>(d->g.degree());
  std::uint64_t size = 1;
  for (unsigned i = 0; i < d->m; ++i) size *= d->k.order();
  d->size = size;
  d_ = std::move(d);
}

ResidueIdx ResidueRing::index_of(const Poly& f) const {
  Poly r = f % d_->g;
  std::uint64_t idx = 0;
  const std::uint64_t q = d_->k.order();
  for (std::size_t i = d_->m; i-- > 0;) idx = idx * q + r.coeff(i);
  return idx;
}

Poly ResidueRing::poly_of(ResidueIdx r) const {
  const std::uint64_t q = d_->k.order();
  std::vector<Fe> c(d_->m, 0);
  for (unsigned i = 0; i < d_->m; ++i) {
    c[i] = static_cast<Fe>(r % q);
    r /= q;
  }
  return Poly(d_->k, std::move(c));
}

ResidueIdx ResidueRing::mul(ResidueIdx a, ResidueIdx b) const {
  return index_of(poly_of(a) * poly_of(b));
}

const std::vector<ResidueIdx>& ResidueRing::units() const {
  structure();
  return d_->units;
}

const UnitGroupStructure& ResidueRing::structure() const {
  if (d_->structure) return *d_->structure;
  if (d_->size > d_->cap) throw std::length_error("unit group enumeration cap exceeded");

  auto s = std::make_unique<UnitGroupStructure>();
  s->unit_mask.assign(d_->size, 0);
  for (ResidueIdx r = 0; r < d_->size; ++r) {
    if (coprime(poly_of(r), d_->g)) {
      s->unit_mask[r] = 1;
      d_->units.push_back(r);
    }
  }
  s->group_order = d_->units.size();

  GroupView g;
  g.elems = d_->units;
  g.id = one_idx();
  g.mul = [this](ResidueIdx a, ResidueIdx b) { return mul(a, b); };

  // Sylow decomposition: each p-part is a direct factor.
  const std::uint64_t n = s->group_order;
  for (auto [pr, mult] : factor_u64(n)) {
    std::uint64_t pk = 1;
    for (unsigned i = 0; i < mult; ++i) pk *= pr;
    GroupView syl;
    syl.id = g.id;
    syl.mul = g.mul;
    for (ResidueIdx a : g.elems)
      if (gpow(g, a, pk) == g.id) syl.elems.push_back(a);
    if (syl.elems.size() != pk) throw std::logic_error("Sylow subgroup has wrong size");
    p_group_basis(syl, s->generators, s->orders);
  }

  std::uint64_t prod = 1, lcm_acc = 1;
  for (std::uint64_t o : s->orders) {
    prod *= o;
    lcm_acc = std::lcm(lcm_acc, o);
  }
  if (prod != n) throw std::logic_error("generator orders do not multiply to group order");
  s->exponent = lcm_acc;

  // Exhaustive verification: products of generator powers hit every unit
  // exactly once, and fill the dlog table along the way.
  s->dlog.assign(d_->size, {});
  std::vector<char> seen(d_->size, 0);
  std::vector<std::uint32_t> exps(s->generators.size(), 0);
  std::function<void(std::size_t, ResidueIdx)> rec = [&](std::size_t i, ResidueIdx cur) {
    if (i == s->generators.size()) {
      if (seen[cur]) throw std::logic_error("unit group decomposition is not a direct sum");
      seen[cur] = 1;
      s->dlog[cur] = exps;
      return;
    }
    ResidueIdx x = cur;
    for (std::uint64_t e = 0; e < s->orders[i]; ++e) {
      exps[i] = static_cast<std::uint32_t>(e);
      rec(i + 1, x);
      x = mul(x, s->generators[i]);
    }
    exps[i] = 0;
  };
  rec(0, one_idx());
  for (ResidueIdx u : d_->units)
    if (!seen[u]) throw std::logic_error("unit group decomposition misses a unit");
  // Each generator must have exactly the declared order (direct-sum sanity).
  for (std::size_t i = 0; i < s->generators.size(); ++i) {
    GroupView whole{d_->units, g.mul, g.id};
    if (gorder(whole, s->generators[i]) != s->orders[i])
      throw std::logic_error("generator order mismatch");
  }

  d_->structure = std::move(s);
  return *d_->structure;
}

Character::Character(ResidueRing ring, std::vector<std::uint64_t> exponents)
    : ring_(std::move(ring)), exps_(std::move(exponents)) {
  const auto& s = ring_.structure();
  if (exps_.size() != s.generators.size())
    throw std::invalid_argument("character exponent vector has wrong length");
  for (std::size_t i = 0; i < exps_.size(); ++i) exps_[i] %= s.orders[i];
}

std::uint64_t Character::order_exponent() const { return ring_.structure().exponent; }

bool Character::is_trivial() const {
  return std::all_of(exps_.begin(), exps_.end(), [](std::uint64_t e) { return e == 0; });
}

std::optional<std::uint64_t> Character::eval_exponent_idx(ResidueIdx r) const {
  const auto& s = ring_.structure();
  if (!s.unit_mask[r]) return std::nullopt;
  const auto& d = s.dlog[r];
  std::uint64_t N = s.exponent;
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    // chi(gen_i) = exp(2 pi i exps_[i] / orders[i]); lift to exponent mod N.
    acc = (acc + (__uint128_t(exps_[i]) * d[i] % s.orders[i]) * (N / s.orders[i])) % N;
  }
  return acc;
}

std::optional<std::uint64_t> Character::eval_exponent(const Poly& f) const {
  return eval_exponent_idx(ring_.index_of(f));
}

std::complex<double> root_of_unity(std::uint64_t k, std::uint64_t N) {
  double t = kTau * static_cast<double>(k % N) / static_cast<double>(N);
  return {std::cos(t), std::sin(t)};
}

std::complex<double> Character::eval(const Poly& f) const {
  auto e = eval_exponent(f);
  if (!e) return {0.0, 0.0};
  return root_of_unity(*e, order_exponent());
}

Character Character::conjugate() const {
  const auto& s = ring_.structure();
  std::vector<std::uint64_t> e(exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = (s.orders[i] - exps_[i]) % s.orders[i];
  return Character(ring_, std::move(e));
}

std::vector<Character> characters(const ResidueRing& ring) {
  const auto& s = ring.structure();
  std::vector<Character> out;
  out.reserve(s.group_order);
  std::vector<std::uint64_t> e(s.generators.size(), 0);
  while (true) {
    out.emplace_back(ring, e);
    std::size_t i = 0;
    for (; i < e.size(); ++i) {
      if (++e[i] < s.orders[i]) break;
      e[i] = 0;
    }
    if (i == e.size()) break;
  }
  if (out.size() != s.group_order) throw std::logic_error("character count mismatch");
  return out;
}

bool is_primitive(const Character& chi) {
  const ResidueRing& ring = chi.ring();
  const Poly& g = ring.modulus();
  for (const Poly& gp : monic_divisors(g)) {
    if (gp == g.monic()) continue;
    // Kernel of reduction mod gp: units congruent to 1 mod gp. chi must be
    // nontrivial on it.
    bool nontrivial_on_kernel = false;
    for (ResidueIdx u : ring.units()) {
      Poly f = ring.poly_of(u);
      if (!((f - Poly::one(ring.field())) % gp).is_zero()) continue;
      auto e = chi.eval_exponent_idx(u);
      if (e && *e != 0) {
        nontrivial_on_kernel = true;
        break;
      }
    }
    if (!nontrivial_on_kernel) return false;
  }
  return true;
}

bool is_odd(const Character& chi) {
  const ResidueRing& ring = chi.ring();
  const Field& k = ring.field();
  for (std::uint64_t c = 1; c < k.order(); ++c) {
    auto e = chi.eval_exponent(Poly::constant(k, static_cast<Fe>(c)));
    if (e && *e != 0) return true;
  }
  return false;
}

}  // namespace ffnt
