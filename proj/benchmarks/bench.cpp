#include <benchmark/benchmark.h>

#include <complex>

#include "ffnt/lfunc.hpp"
#include "ffnt/theta.hpp"
#include "ffnt/variety.hpp"

using namespace ffnt;

namespace {

void BM_cantor_add(benchmark::State& state) {
  Field k = Field::make(static_cast<std::uint32_t>(state.range(0)), 1);
  HyperellipticCurve c(Poly(k, {1, 0, 0, 0, 0, 1}));
  JacobianTable jac = enumerate_jacobian(c);
  std::size_t i = 0, j = jac.order() / 2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cantor_add(c, jac.elements[i], jac.elements[j]));
    i = (i + 1) % jac.order();
    j = (j + 3) % jac.order();
  }
}
BENCHMARK(BM_cantor_add)->Arg(3)->Arg(7)->Arg(11);

void BM_count_points(benchmark::State& state) {
  Field k = Field::make(3, 1);
  ResidueRing ring(k, Poly(k, {1, 0, 1}));
  unsigned d = static_cast<unsigned>(state.range(0));
  VarietySpec spec(ring, {d, d, d, d}, 2);
  for (auto _ : state) benchmark::DoNotOptimize(count_points(spec).count);
}
BENCHMARK(BM_count_points)->Arg(1)->Arg(2);

void BM_char_coefficient(benchmark::State& state) {
  Field k = Field::make(3, 1);
  ResidueRing ring(k, Poly(k, {1, 0, 0, 1}));
  Character chi = characters(ring)[1];
  unsigned d = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(char_coefficient(chi, d).total_terms());
}
BENCHMARK(BM_char_coefficient)->Arg(2)->Arg(4)->Arg(6);

void BM_check_rh(benchmark::State& state) {
  Field k = Field::make(3, 1);
  ResidueRing ring(k, Poly(k, {1, 0, 0, 1}));
  auto chars = characters(ring);
  LPolynomial l(chars[1]);
  for (auto _ : state) benchmark::DoNotOptimize(check_rh(l).max_deviation);
}
BENCHMARK(BM_check_rh);

}  // namespace

BENCHMARK_MAIN();
