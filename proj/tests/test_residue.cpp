#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "doctest.h"
#include "ffnt/cyclosum.hpp"
#include "ffnt/residue.hpp"

using namespace ffnt;

namespace {

// Independent unit count: q^m scan with a gcd test.
std::uint64_t count_units_directly(const ResidueRing& ring) {
  std::uint64_t n = 0;
  for (ResidueIdx r = 0; r < ring.size(); ++r)
    if (coprime(ring.poly_of(r), ring.modulus())) ++n;
  return n;
}

// Independent unit count: the multiplicative Euler product over the
// factorization of g, kept in integers.
std::uint64_t count_units_by_euler_product(const Field& k, const Poly& g) {
  std::uint64_t total = 1;
  for (const auto& [pi, mult] : factor(g)) {
    std::uint64_t qd = 1;
    for (int i = 0; i < pi.degree(); ++i) qd *= k.order();
    total *= qd - 1;
    for (int i = 1; i < mult; ++i) total *= qd;
  }
  return total;
}

// True iff chi is constant on the fibers of reduction mod g_prime, i.e.
// factors through the smaller modulus. Brute force, independent of
// is_primitive's kernel computation.
bool factors_through(const Character& chi, const Poly& g_prime) {
  const ResidueRing& ring = chi.ring();
  for (ResidueIdx a = 0; a < ring.size(); ++a) {
    if (!ring.is_unit(a)) continue;
    for (ResidueIdx b = 0; b < ring.size(); ++b) {
      if (!ring.is_unit(b)) continue;
      if ((ring.poly_of(a) - ring.poly_of(b)) % g_prime != Poly::zero(ring.field())) continue;
      if (chi.eval_exponent_idx(a) != chi.eval_exponent_idx(b)) return false;
    }
  }
  return true;
}

}  // namespace

TEST_SUITE_BEGIN("residue");

TEST_CASE("unit group order: direct count = Euler product = declared order") {
  for (std::uint32_t p : {2u, 3u}) {
    Field k = Field::make(p, 1);
    for (unsigned m = 1; m <= 3; ++m) {
      for (std::uint64_t i = 0; i < monic_count(k, m); ++i) {
        Poly g = monic_by_index(k, m, i);
        ResidueRing ring(k, g);
        std::uint64_t direct = count_units_directly(ring);
        CHECK(ring.structure().group_order == direct);
        CHECK(count_units_by_euler_product(k, g) == direct);
        CHECK(ring.units().size() == direct);
      }
    }
  }
}

TEST_CASE("generator orders are honest and the dlog reconstructs every unit") {
  Field k = Field::make(3, 1);
  for (unsigned m = 1; m <= 2; ++m) {
    for (std::uint64_t i = 0; i < monic_count(k, m); ++i) {
      ResidueRing ring(k, monic_by_index(k, m, i));
      const UnitGroupStructure& st = ring.structure();
      std::uint64_t prod = 1;
      for (std::size_t j = 0; j < st.generators.size(); ++j) {
        prod *= st.orders[j];
        // Recompute the order by repeated multiplication.
        ResidueIdx acc = st.generators[j];
        std::uint64_t o = 1;
        while (acc != ring.one_idx()) { acc = ring.mul(acc, st.generators[j]); ++o; }
        CHECK(o == st.orders[j]);
      }
      CHECK(prod == st.group_order);
      for (ResidueIdx r : ring.units()) {
        ResidueIdx rebuilt = ring.one_idx();
        for (std::size_t j = 0; j < st.generators.size(); ++j) {
          ResidueIdx pw = ring.one_idx();
          for (std::uint32_t c = 0; c < st.dlog[r][j]; ++c) pw = ring.mul(pw, st.generators[j]);
          rebuilt = ring.mul(rebuilt, pw);
        }
        CHECK(rebuilt == r);
      }
    }
  }
}

TEST_CASE("worked example: (F_3[T]/T(T+1))^x has order 4") {
  Field k = Field::make(3, 1);
  ResidueRing ring(k, Poly(k, {0, 1}) * Poly(k, {1, 1}));
  CHECK(ring.structure().group_order == 4);
}

TEST_CASE("characters: count, trivial first, homomorphism, zero extension") {
  Field k = Field::make(3, 1);
  ResidueRing ring(k, Poly(k, {1, 0, 1}));  // T^2 + 1, group order 8
  auto chars = characters(ring);
  REQUIRE(chars.size() == ring.structure().group_order);
  CHECK(chars[0].is_trivial());
  for (std::size_t i = 1; i < chars.size(); ++i) CHECK_FALSE(chars[i].is_trivial());

  std::uint64_t n = chars[0].order_exponent();
  for (const Character& chi : chars) {
    for (ResidueIdx a : ring.units()) {
      for (ResidueIdx b : ring.units()) {
        auto ea = chi.eval_exponent_idx(a);
        auto eb = chi.eval_exponent_idx(b);
        auto eab = chi.eval_exponent_idx(ring.mul(a, b));
        REQUIRE(ea.has_value());
        REQUIRE(eb.has_value());
        REQUIRE(eab.has_value());
        CHECK(*eab == (*ea + *eb) % n);
      }
    }
  }
}

TEST_CASE("non-coprime arguments extend by zero") {
  Field k = Field::make(3, 1);
  ResidueRing ring(k, Poly(k, {0, 1}) * Poly(k, {1, 1}));  // T(T+1)
  for (const Character& chi : characters(ring)) {
    CHECK_FALSE(chi.eval_exponent(Poly::x(k)).has_value());
    CHECK(chi.eval(Poly::x(k)) == std::complex<double>(0.0, 0.0));
  }
}

TEST_CASE("both orthogonality relations hold exactly") {
  Field k = Field::make(3, 1);
  for (Poly g : {Poly(k, {0, 1}) * Poly(k, {1, 1}), Poly(k, {1, 0, 1}), Poly(k, {0, 0, 1})}) {
    ResidueRing ring(k, g);
    auto chars = characters(ring);
    std::uint64_t n = chars[0].order_exponent();
    // Sum over characters at a fixed unit.
    for (ResidueIdx r : ring.units()) {
      CycloSum s(n);
      for (const Character& chi : chars) s.add_root(*chi.eval_exponent_idx(r));
      if (r == ring.one_idx()) {
        CHECK(s.counts()[0] == static_cast<std::int64_t>(chars.size()));
      } else {
        CHECK(s.is_zero_exact());
      }
    }
    // Sum over units for a fixed character.
    for (const Character& chi : chars) {
      CycloSum s(n);
      for (ResidueIdx r : ring.units()) s.add_root(*chi.eval_exponent_idx(r));
      if (chi.is_trivial()) {
        CHECK(s.counts()[0] == static_cast<std::int64_t>(ring.units().size()));
      } else {
        CHECK(s.is_zero_exact());
      }
    }
  }
}

TEST_CASE("mod T over F_5: four characters, three of them odd") {
  Field k = Field::make(5, 1);
  ResidueRing ring(k, Poly::x(k));
  auto chars = characters(ring);
  REQUIRE(chars.size() == 4);
  unsigned odd = 0;
  for (const Character& chi : chars)
    if (is_odd(chi)) ++odd;
  CHECK(odd == 3);
  CHECK_FALSE(is_odd(chars[0]));
}

TEST_CASE("primitivity matches the brute-force factor-through test") {
  Field k = Field::make(3, 1);
  for (unsigned m = 1; m <= 2; ++m) {
    for (std::uint64_t i = 0; i < monic_count(k, m); ++i) {
      Poly g = monic_by_index(k, m, i);
      ResidueRing ring(k, g);
      auto divisors = monic_divisors(g);
      for (const Character& chi : characters(ring)) {
        bool reducible = false;
        for (const Poly& d : divisors) {
          if (d == g.monic()) continue;
          if (factors_through(chi, d)) reducible = true;
        }
        CHECK(is_primitive(chi) == !reducible);
      }
    }
  }
}

TEST_CASE("mod T^2 over F_3: exactly 4 of the 6 characters are primitive") {
  Field k = Field::make(3, 1);
  ResidueRing ring(k, Poly(k, {0, 0, 1}));
  auto chars = characters(ring);
  REQUIRE(chars.size() == 6);
  unsigned primitive = 0;
  for (const Character& chi : chars)
    if (is_primitive(chi)) ++primitive;
  CHECK(primitive == 4);
  CHECK_FALSE(is_primitive(chars[0]));
}

TEST_CASE("conjugate character evaluates to the complex conjugate") {
  Field k = Field::make(3, 1);
  ResidueRing ring(k, Poly(k, {1, 0, 1}));
  for (const Character& chi : characters(ring)) {
    Character bar = chi.conjugate();
    for (ResidueIdx r : ring.units()) {
      Poly f = ring.poly_of(r);
      CHECK(std::abs(bar.eval(f) - std::conj(chi.eval(f))) < 1e-12);
    }
  }
}

TEST_CASE("exact cyclotomic zero test agrees with numerics") {
  for (std::uint64_t n : {1ull, 2ull, 3ull, 4ull, 6ull, 8ull, 12ull}) {
    CycloSum all(n);
    for (std::uint64_t e = 0; e < n; ++e) all.add_root(e);
    if (n > 1) {
      CHECK(all.is_zero_exact());
      CHECK(std::abs(all.value()) < 1e-9);
    }
    CycloSum one(n);
    one.add_root(0);
    CHECK_FALSE(one.is_zero_exact());
  }
}

TEST_SUITE_END();
