#include <benchmark/benchmark.h>

#include <cmath>

#include "affine2d/actions.hpp"
#include "affine2d/charts.hpp"
#include "affine2d/dynamics.hpp"
#include "affine2d/quantum.hpp"
#include "affine2d/random.hpp"
#include "affine2d/sturm.hpp"

using namespace affine2d;

namespace {

const PhysicalParams kUnit{1, 1, 1};

void bm_two_polar_decompose(benchmark::State& state)
{
    SplitMix64 rng(1);
    ConfigurationMatrix m{1.3, -0.4, 0.2, 0.9};
    for (auto _ : state) {
        benchmark::DoNotOptimize(two_polar_decompose(m));
        m.x += 1e-12;  // defeat value caching
    }
}
BENCHMARK(bm_two_polar_decompose);

void bm_transform_to_elliptic(benchmark::State& state)
{
    ChartPoint tp{Chart::twoPolar, {0.3, 1.1, 1.7, 0.6}};
    for (auto _ : state)
        benchmark::DoNotOptimize(transform(tp, Chart::elliptic));
}
BENCHMARK(bm_transform_to_elliptic);

void bm_metric_polar(benchmark::State& state)
{
    ChartPoint p{Chart::polarRTheta, {0.2, 0.4, 1.3, 0.8}};
    for (auto _ : state)
        benchmark::DoNotOptimize(inverse_metric_at(p));
}
BENCHMARK(bm_metric_polar);

void bm_rk4_step(benchmark::State& state)
{
    PotentialModel m{PotentialKind::anharmonicRTheta, kUnit};
    PhaseState s{{Chart::polarRTheta, {0.1, 0.2, 1.4, 0.7}}, {0.2, -0.1, 0.3, 0.1}};
    const double dt = 1e-3;
    for (auto _ : state) {
        Trajectory t = integrate(m, s, dt, 1, Integrator::rk4);
        benchmark::DoNotOptimize(t);
    }
}
BENCHMARK(bm_rk4_step);

void bm_action_integral(benchmark::State& state)
{
    PotentialModel m{PotentialKind::anharmonicAlphaBeta, kUnit};
    for (auto _ : state)
        benchmark::DoNotOptimize(action_integral(m, SliceKind::alphaSlice, 4.2, 2.5, -1.0));
}
BENCHMARK(bm_action_integral);

void bm_sturm_alpha_slice(benchmark::State& state)
{
    PotentialModel m{PotentialKind::anharmonicAlphaBeta, kUnit};
    SLProblem prob = build_problem(SLEquation::alphaRadial, m, HalfInt(2), HalfInt(-1));
    prob.grid_n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(lowest_eigenvalues(prob, 4));
}
BENCHMARK(bm_sturm_alpha_slice)->Arg(1000)->Arg(2000)->Arg(4000);

void bm_wigner_d(benchmark::State& state)
{
    HalfInt j = HalfInt::from_twice(5);
    HalfInt m = HalfInt::from_twice(3), l = HalfInt::from_twice(-1);
    double theta = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(wigner_small_d(j, m, l, theta));
        theta += 1e-6;
    }
}
BENCHMARK(bm_wigner_d);

} // namespace

BENCHMARK_MAIN();
