#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "doctest.h"
#include "ffnt/charsum.hpp"

using namespace ffnt;

namespace {
std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}
}  // namespace

TEST_SUITE_BEGIN("charsum");

TEST_CASE("binomial coefficients") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(4, 5) == 0);
  CHECK(binomial(10, 10) == 1);
}

TEST_CASE("n = 0: the sum collapses to the single term chi(f)") {
  Field k = Field::make(3, 1);
  ResidueRing ring(k, Poly(k, {1, 0, 1}));
  for (const Character& chi : characters(ring)) {
    for (std::uint64_t i = 0; i < monic_count(k, 1); ++i) {
      Poly f = monic_by_index(k, 1, i);
      IntervalSum s = char_sum(chi, f, 0);
      CHECK(s.interval == 1);
      CHECK(s.terms == (coprime(f, ring.modulus()) ? 1 : 0));
      CHECK(std::abs(s.value - chi.eval(f)) < 1e-12);
    }
  }
}

TEST_CASE("trivial character: the sum counts the coprime shifts") {
  Field k = Field::make(3, 1);
  Poly g = Poly::x(k) * Poly(k, {1, 1});
  ResidueRing ring(k, g);
  Character triv = characters(ring)[0];
  for (unsigned n = 0; n <= 2; ++n) {
    for (std::uint64_t i = 0; i < monic_count(k, 2); ++i) {
      Poly f = monic_by_index(k, 2, i);
      std::uint64_t expect = 0;
      for (std::uint64_t j = 0; j < ipow(3, n); ++j)
        if (coprime(f + poly_below_degree_by_index(k, n, j), g)) ++expect;
      IntervalSum s = char_sum(triv, f, n);
      CHECK(s.terms == expect);
      CHECK(std::abs(s.value - static_cast<double>(expect)) < 1e-12);
    }
  }
}

TEST_CASE("exact sums match a direct complex recomputation") {
  Field k = Field::make(3, 1);
  ResidueRing ring(k, Poly(k, {1, 0, 1}));
  Poly f = Poly::x(k);
  for (const Character& chi : characters(ring)) {
    for (unsigned n = 0; n <= 2; ++n) {
      std::complex<double> direct(0, 0);
      for (std::uint64_t j = 0; j < ipow(3, n); ++j)
        direct += chi.eval(f + poly_below_degree_by_index(k, n, j));
      IntervalSum s = char_sum(chi, f, n);
      CHECK(std::abs(s.value - direct) < 1e-12);
      CHECK(std::abs(s.exact.value() - direct) < 1e-12);
      CHECK(std::abs(s.value) <= static_cast<double>(s.interval) + 1e-9);  // trivial bound
    }
  }
}

TEST_CASE("completeness: summing over all characters counts solutions of f+h = 1") {
  Field k = Field::make(3, 1);
  Poly g(k, {1, 0, 1});
  ResidueRing ring(k, g);
  for (std::uint64_t i = 0; i < monic_count(k, 2); ++i) {
    Poly f = monic_by_index(k, 2, i);
    for (unsigned n = 0; n <= 2; ++n) {
      std::complex<double> total(0, 0);
      for (const Character& chi : characters(ring)) total += char_sum(chi, f, n).value;
      std::uint64_t solutions = 0;
      for (std::uint64_t j = 0; j < ipow(3, n); ++j) {
        Poly shifted = f + poly_below_degree_by_index(k, n, j);
        if ((shifted - Poly::one(k)) % g == Poly::zero(k)) ++solutions;
      }
      double expect = static_cast<double>(ring.structure().group_order * solutions);
      CHECK(std::abs(total - expect) < 1e-9);
    }
  }
}

TEST_CASE("square-root cancellation bound: no violations on the split cubic scan") {
  Field k = Field::make(3, 1);
  Poly g = Poly::x(k) * Poly(k, {1, 1}) * Poly(k, {2, 1});
  ResidueRing ring(k, g);
  auto chars = characters(ring);
  unsigned checked = 0;
  for (std::size_t c = 1; c < chars.size(); ++c) {
    for (std::uint64_t i = 0; i < ipow(3, 3); ++i) {
      Poly f = poly_below_degree_by_index(k, 3, i);
      for (unsigned n = 0; n <= 2; ++n) {
        SsBoundCheck b = check_ss_bound(chars[c], f, n);
        CHECK(b.within);
        CHECK_FALSE(b.binomial_zero);
        CHECK(b.bound == doctest::Approx((std::sqrt(3.0) + 1.0) * binomial(2, n) *
                                         std::pow(3.0, n / 2.0)));
        ++checked;
      }
    }
  }
  CHECK(checked == 7 * 27 * 3);
}

TEST_CASE("the stated bound degenerates when n exceeds m-1") {
  Field k = Field::make(3, 1);
  ResidueRing ring(k, Poly::x(k) * Poly(k, {1, 1}));  // m = 2
  auto chars = characters(ring);
  SsBoundCheck b = check_ss_bound(chars[1], Poly::x(k) + Poly::one(k), 2);  // n = 2 > m-1
  CHECK(b.binomial_zero);
  CHECK(b.bound == 0.0);
}

TEST_CASE("bound checker enforces its hypotheses") {
  Field k = Field::make(3, 1);
  ResidueRing sq(k, Poly(k, {0, 0, 1}));  // T^2 not squarefree
  CHECK_THROWS(check_ss_bound(characters(sq)[1], Poly::one(k), 1));
  ResidueRing ok(k, Poly(k, {1, 0, 1}));
  CHECK_THROWS(check_ss_bound(characters(ok)[0], Poly::one(k), 1));  // trivial chi
}

TEST_CASE("fiber over f + h = 1: extension degree 1 and F_q-rational solutions") {
  Field k = Field::make(3, 1);
  Poly g(k, {1, 0, 1});
  ResidueRing ring(k, g);
  // Choose f with f = 1 mod g so that h = 0 gives f + h = 1.
  Poly f = Poly::one(k);
  LangFiber fib = lang_fiber(ring, f, Poly::zero(k));
  CHECK(fib.e == 1);
  CHECK(fib.ext.order() == 3);
  // a^{(q)} = a: every unit with F_q coefficients solves it.
  CHECK(fib.solutions.size() == ring.structure().group_order);
}

TEST_CASE("worked fiber: q = 3, g = T") {
  Field k = Field::make(3, 1);
  ResidueRing ring(k, Poly::x(k));
  Poly f(k, {2});  // constant 2, coprime to T
  LangFiber fib = lang_fiber(ring, f, Poly::zero(k));
  // f + 0 = 2 has multiplicative order 2 mod T, so e = 2 and the fiber is a
  // torsor under the unit group of order 2.
  CHECK(fib.e == 2);
  CHECK(fib.solutions.size() == 2);
}

TEST_CASE("torsor verification passes on worked examples") {
  Field k2 = Field::make(2, 1);
  ResidueRing r2(k2, Poly(k2, {1, 1, 1}));
  TorsorReport rep2 = verify_torsor(r2, Poly::x(k2), 1);
  CHECK(rep2.pass);
  CHECK(rep2.group_order == 3);
  for (const TorsorCheck& c : rep2.checks) {
    CHECK(c.fiber_size == 3);
    CHECK(c.size_ok);
    CHECK(c.action_ok);
    CHECK(c.frobenius_ok);
  }

  Field k3 = Field::make(3, 1);
  ResidueRing r3(k3, Poly(k3, {1, 0, 1}));
  TorsorReport rep3 = verify_torsor(r3, Poly::x(k3), 2);
  CHECK(rep3.pass);
  CHECK(rep3.group_order == 8);
  CHECK(!rep3.checks.empty());
}

TEST_SUITE_END();
