#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "doctest.h"
#include "ffnt/lfunc.hpp"
#include "ffnt/variety.hpp"

using namespace ffnt;

namespace {

// Independent recomputation of c_d(chi) in floating point, straight from the
// definition, without CycloSum.
std::complex<double> coeff_numeric(const Character& chi, unsigned d) {
  std::complex<double> s(0.0, 0.0);
  const Field& k = chi.ring().field();
  for (std::uint64_t i = 0; i < monic_count(k, d); ++i)
    s += chi.eval(monic_by_index(k, d, i));
  return s;
}

std::uint64_t coprime_monic_count(const ResidueRing& ring, unsigned d) {
  std::uint64_t n = 0;
  const Field& k = ring.field();
  for (std::uint64_t i = 0; i < monic_count(k, d); ++i)
    if (coprime(monic_by_index(k, d, i), ring.modulus())) ++n;
  return n;
}

}  // namespace

TEST_SUITE_BEGIN("lfunc");

TEST_CASE("c_0 = 1 for every character") {
  Field k = Field::make(3, 1);
  for (Poly g : {Poly::x(k), Poly(k, {1, 0, 1}), Poly(k, {0, 0, 1})}) {
    ResidueRing ring(k, g);
    for (const Character& chi : characters(ring)) {
      CycloSum c0 = char_coefficient(chi, 0);
      CHECK(c0.counts()[0] == 1);
      CHECK(c0.total_terms() == 1);
    }
  }
}

TEST_CASE("coefficients vanish exactly from degree m onward (nontrivial chi)") {
  Field k = Field::make(3, 1);
  ResidueRing ring(k, Poly(k, {1, 0, 1}));  // m = 2
  auto chars = characters(ring);
  for (std::size_t i = 1; i < chars.size(); ++i)
    for (unsigned d = 2; d <= 4; ++d)
      CHECK(char_coefficient(chars[i], d).is_zero_exact());
}

TEST_CASE("trivial character mod T counts coprime monics: q^d - q^(d-1)") {
  Field k = Field::make(3, 1);
  ResidueRing ring(k, Poly::x(k));
  Character triv = characters(ring)[0];
  for (unsigned d = 1; d <= 5; ++d) {
    CycloSum c = char_coefficient(triv, d);
    std::int64_t qd = 1;
    for (unsigned i = 1; i < d; ++i) qd *= 3;
    CHECK(c.counts()[0] == 3 * qd - qd);  // exact: all exponents are 0
  }
}

TEST_CASE("exact coefficients match the numeric recomputation") {
  Field k = Field::make(3, 1);
  ResidueRing ring(k, Poly(k, {1, 0, 1}));
  auto chars = characters(ring);
  for (std::size_t i = 1; i < chars.size(); ++i) {
    LPolynomial l(chars[i]);
    for (unsigned d = 0; d < 2; ++d)
      CHECK(std::abs(l.coeffs()[d].value() - coeff_numeric(chars[i], d)) < 1e-12);
  }
}

TEST_CASE("modulus of degree 1 forces constant L = 1") {
  Field k = Field::make(5, 1);
  ResidueRing ring(k, Poly::x(k));
  auto chars = characters(ring);
  for (std::size_t i = 1; i < chars.size(); ++i) {
    LPolynomial l(chars[i]);
    CHECK(l.degree() == 0);
    CHECK(std::abs(l.eval({0.3, 0.7}) - std::complex<double>(1.0, 0.0)) < 1e-12);
  }
}

TEST_CASE("primitive odd characters mod T^2 over F_3 satisfy the sqrt(q) root bound") {
  Field k = Field::make(3, 1);
  ResidueRing ring(k, Poly(k, {0, 0, 1}));
  unsigned tested = 0;
  for (const Character& chi : characters(ring)) {
    if (chi.is_trivial() || !is_primitive(chi) || !is_odd(chi)) continue;
    RhReport r = check_rh(LPolynomial(chi));
    CHECK(r.converged);
    REQUIRE(r.reciprocal_root_moduli.size() == 1);
    CHECK(std::abs(r.reciprocal_root_moduli[0] - std::sqrt(3.0)) < 1e-9);
    ++tested;
  }
  CHECK(tested > 0);
}

TEST_CASE("root finding converges for all characters mod a split cubic") {
  Field k = Field::make(3, 1);
  Poly g = Poly::x(k) * Poly(k, {1, 1}) * Poly(k, {2, 1});
  ResidueRing ring(k, g);
  auto chars = characters(ring);
  for (std::size_t i = 1; i < chars.size(); ++i) {
    RhReport r = check_rh(LPolynomial(chars[i]));
    CHECK(r.converged);
    for (double m : r.reciprocal_root_moduli) CHECK(m > 0.999);  // no root inside the unit disc
  }
}

TEST_CASE("conjugate character gives the conjugate L-value") {
  Field k = Field::make(3, 1);
  ResidueRing ring(k, Poly(k, {1, 0, 1}));
  auto chars = characters(ring);
  std::complex<double> u(0.41, -0.23);
  for (std::size_t i = 1; i < chars.size(); ++i) {
    LPolynomial l(chars[i]);
    LPolynomial lbar(chars[i].conjugate());
    CHECK(std::abs(lbar.eval(std::conj(u)) - std::conj(l.eval(u))) < 1e-12);
  }
}

TEST_CASE("degree-1 modulus moment equals the single |L|^{2k} term") {
  Field k = Field::make(3, 1);
  ResidueRing ring(k, Poly::x(k));  // group order 2: trivial + one quadratic chi
  std::complex<double> u(1.0 / std::sqrt(3.0), 0.0);
  auto chars = characters(ring);
  LPolynomial l(chars[1]);
  double expect = std::norm(l.eval(u));
  for (unsigned kk : {1u, 2u}) {
    MomentReport m = moment_direct(ring, u, kk, Population::kAllNontrivial);
    CHECK(m.group_order == 2);
    CHECK(m.selected == 1);
    CHECK(m.value == doctest::Approx(std::pow(expect, kk) / 2.0).epsilon(1e-10));
  }
}

TEST_CASE("moment cross-check against variety point counts (k = 1)") {
  Field k = Field::make(3, 1);
  ResidueRing ring(k, Poly(k, {1, 0, 1}));  // m = 2
  double u = 1.0 / std::sqrt(3.0);
  std::uint64_t big_g = ring.structure().group_order;

  // sum over nontrivial chi of |L(chi, u)|^2
  //   = sum_{d1, d2 < m} u^{d1 + d2} (G N(d1, d2) - t_{d1} t_{d2})
  // where N is the point count of the (d1, d2) congruence variety and t_d is
  // the real coefficient count of the trivial character.
  double total = 0.0;
  for (unsigned d1 = 0; d1 < 2; ++d1) {
    for (unsigned d2 = 0; d2 < 2; ++d2) {
      VarietySpec spec(ring, {d1, d2}, 1);
      std::uint64_t n_pts = count_points(spec).count;
      double tda = static_cast<double>(coprime_monic_count(ring, d1));
      double tdb = static_cast<double>(coprime_monic_count(ring, d2));
      total += std::pow(u, d1 + d2) * (static_cast<double>(big_g * n_pts) - tda * tdb);
    }
  }
  MomentReport m = moment_direct(ring, {u, 0.0}, 1, Population::kAllNontrivial);
  CHECK(m.selected == big_g - 1);
  CHECK(m.value == doctest::Approx(total / static_cast<double>(big_g)).epsilon(1e-9));
}

TEST_CASE("primitive-odd population selects exactly the primitive odd characters") {
  Field k = Field::make(3, 1);
  ResidueRing ring(k, Poly(k, {1, 0, 1}));
  std::uint64_t expect = 0;
  for (const Character& chi : characters(ring))
    if (!chi.is_trivial() && is_primitive(chi) && is_odd(chi)) ++expect;
  MomentReport m =
      moment_direct(ring, {1.0 / std::sqrt(3.0), 0.0}, 1, Population::kPrimitiveOdd);
  CHECK(m.selected == expect);
  CHECK(expect > 0);
}

TEST_SUITE_END();
