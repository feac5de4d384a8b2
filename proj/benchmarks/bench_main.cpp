#include <benchmark/benchmark.h>

#include <cmath>
#include <complex>

#include "vrkit/disc.hpp"
#include "vrkit/halfplane.hpp"
#include "vrkit/loewner.hpp"
#include "vrkit/region.hpp"
#include "vrkit/representations.hpp"

using namespace vrkit;

namespace {

const cx kDiscBase = std::polar(0.9, std::acos(-1.0) / 4.0);
const cx kRealBase{1.0 / 3.0, 0.5};

void bm_integrate_measure_driving(benchmark::State& state) {
    const auto driving = sample_driving(10, 50.0, 42);
    for (auto _ : state) {
        auto traj = integrate(cx{1.0, 1.0}, driving, driving.max_time());
        benchmark::DoNotOptimize(traj.samples.back().w);
    }
}
BENCHMARK(bm_integrate_measure_driving);

void bm_integrate_to_height_exponent(benchmark::State& state) {
    const auto driving = exponent_driving(-0.5, cx{1.0, 1.0});
    for (auto _ : state) {
        auto traj = integrate_to_height(cx{1.0, 1.0}, driving, 3.0);
        benchmark::DoNotOptimize(traj.samples.back().w);
    }
}
BENCHMARK(bm_integrate_to_height_exponent);

void bm_dense_trajectory_eval(benchmark::State& state) {
    const auto driving = sample_driving(10, 50.0, 42);
    const auto traj = integrate(cx{1.0, 1.0}, driving, driving.max_time());
    double t = 0.0;
    const double step = driving.max_time() / 97.0;
    for (auto _ : state) {
        t += step;
        if (t > driving.max_time()) t = 0.0;
        benchmark::DoNotOptimize(traj.at(t));
    }
}
BENCHMARK(bm_dense_trajectory_eval);

void bm_szapiel_eval(benchmark::State& state) {
    const auto spec = sample_szapiel(0.05, 1.0, static_cast<int>(state.range(0)), 7);
    for (auto _ : state) benchmark::DoNotOptimize(szapiel_eval(spec, kDiscBase));
}
BENCHMARK(bm_szapiel_eval)->Arg(1)->Arg(4);

void bm_herglotz_eval(benchmark::State& state) {
    const auto spec = sample_herglotz(herglotz_constraint::zero, 4, 7);
    for (auto _ : state) benchmark::DoNotOptimize(herglotz_eval(spec, kRealBase).second);
}
BENCHMARK(bm_herglotz_eval);

void bm_classify_union_region(benchmark::State& state) {
    const cx w{0.3, 0.3};
    for (auto _ : state) benchmark::DoNotOptimize(classify_vu(kDiscBase, w).member);
}
BENCHMARK(bm_classify_union_region);

void bm_classify_fixed_derivative(benchmark::State& state) {
    const cx w{0.3, 0.3};
    for (auto _ : state) benchmark::DoNotOptimize(classify_vt(kDiscBase, 0.5, w).member);
}
BENCHMARK(bm_classify_fixed_derivative);

void bm_classify_forward_hp(benchmark::State& state) {
    const cx w{0.8, 1.7};
    for (auto _ : state) benchmark::DoNotOptimize(classify_vi(cx{1.0, 1.0}, w).member);
}
BENCHMARK(bm_classify_forward_hp);

void bm_make_region(benchmark::State& state) {
    for (auto _ : state) {
        auto spec = make_disc_region("VU", kDiscBase);
        benchmark::DoNotOptimize(spec.edges.size());
    }
}
BENCHMARK(bm_make_region);

void bm_boundary_polyline(benchmark::State& state) {
    const auto spec = make_disc_region("VT", kDiscBase, 0.5);
    for (auto _ : state) {
        auto poly = boundary_polyline(spec);
        benchmark::DoNotOptimize(poly.vertices.size());
    }
}
BENCHMARK(bm_boundary_polyline);

}  // namespace

BENCHMARK_MAIN();
