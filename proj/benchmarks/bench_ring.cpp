#include <benchmark/benchmark.h>

#include "phec/ring.hpp"

using namespace phec;

static void BM_PolyMul(benchmark::State& state) {
  Ring R = Ring::polyz({"q"});
  Poly q = poly_var(R, 0);
  Poly a = poly_add(R, poly_pow(R, q, 5), poly_from_int(R, 3));
  Poly b = poly_sub(R, poly_pow(R, q, 4), q);
  for (auto _ : state) {
    benchmark::DoNotOptimize(poly_mul(R, a, b));
  }
}
BENCHMARK(BM_PolyMul);

BENCHMARK_MAIN();
