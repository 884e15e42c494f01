// SPDX-License-Identifier: Apache-2.0
#include "hk/green.hpp"
#include "hk/hankel.hpp"
#include "hk/psiphi.hpp"
#include "hk/qfuncs.hpp"
#include "hk/specfun.hpp"

#include <benchmark/benchmark.h>

#include <cmath>

static void BM_BesselJ1(benchmark::State& state) {
    double x = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(hk::bessel_j1(x));
        x += 0.37;
        if (x > 180.0) x = 0.1;
    }
}
BENCHMARK(BM_BesselJ1);

static void BM_PsiConstantPotential(benchmark::State& state) {
    const auto cp = hk::CoefficientProvider::constant_potential(1.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(hk::psi(cp, hk::FamilyIndex::integer(0), 1.0).value);
}
BENCHMARK(BM_PsiConstantPotential);

static void BM_QdEven(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(hk::q_d(2, 20.0, 0.5));
}
BENCHMARK(BM_QdEven);

static void BM_HankelG19(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(hk::verify_g19(1.0, 0.3));
}
BENCHMARK(BM_HankelG19);

static void BM_GreenEvenD2(benchmark::State& state) {
    hk::GreenExpansion e;
    e.d = 2;
    e.m2 = 1.0;
    for (auto _ : state) benchmark::DoNotOptimize(hk::green(e, 0.5));
}
BENCHMARK(BM_GreenEvenD2);

BENCHMARK_MAIN();
