#include <benchmark/benchmark.h>

#include <cmath>
#include <random>
#include <vector>

#include "slisim/arith.hpp"
#include "slisim/experiments.hpp"
#include "slisim/kernel.hpp"
#include "slisim/level_index.hpp"
#include "slisim/minifloat.hpp"

namespace {

std::vector<double> log_uniform(std::size_t count, double lo, double hi, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> d(std::log(lo), std::log(hi));
    std::vector<double> v(count);
    for (double& x : v) {
        x = std::exp(d(gen));
    }
    return v;
}

std::vector<slisim::SliNumber> encoded(std::size_t count, std::uint64_t seed) {
    const slisim::SliFormat fmt(2, 12);
    std::vector<slisim::SliNumber> out;
    for (double x : log_uniform(count, 1e-6, 1e6, seed)) {
        out.push_back(slisim::encode(x, fmt));
    }
    return out;
}

void BM_encode(benchmark::State& state) {
    const slisim::SliFormat fmt(2, 12);
    const auto xs = log_uniform(1024, 1e-30, 1e30, 1);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(slisim::encode(xs[i++ & 1023], fmt));
    }
}
BENCHMARK(BM_encode);

void BM_decode(benchmark::State& state) {
    const auto ns = encoded(1024, 2);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(slisim::decode(ns[i++ & 1023]));
    }
}
BENCHMARK(BM_decode);

template <int Op>
void BM_arith(benchmark::State& state) {
    const auto xs = encoded(1024, 3);
    const auto ys = encoded(1024, 4);
    std::size_t i = 0;
    for (auto _ : state) {
        const auto& x = xs[i & 1023];
        const auto& y = ys[(i * 7) & 1023];
        ++i;
        if constexpr (Op == 0) {
            benchmark::DoNotOptimize(x + y);
        } else if constexpr (Op == 1) {
            benchmark::DoNotOptimize(x - y);
        } else if constexpr (Op == 2) {
            benchmark::DoNotOptimize(x * y);
        } else {
            benchmark::DoNotOptimize(x / y);
        }
    }
}
BENCHMARK(BM_arith<0>)->Name("BM_add");
BENCHMARK(BM_arith<1>)->Name("BM_sub");
BENCHMARK(BM_arith<2>)->Name("BM_mul");
BENCHMARK(BM_arith<3>)->Name("BM_div");

void BM_kernel_add(benchmark::State& state) {
    const double x = static_cast<double>(state.range(0)) + 0.37;
    const double y = x - 0.81;
    for (auto _ : state) {
        benchmark::DoNotOptimize(slisim::kernel::li_add_sub(x, y, false));
    }
}
BENCHMARK(BM_kernel_add)->DenseRange(1, 4);

void BM_fl(benchmark::State& state) {
    const auto fmt = slisim::minifloat::FloatFormat::binary16();
    const auto xs = log_uniform(1024, 1e-8, 6e4, 5);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(slisim::minifloat::fl(xs[i++ & 1023], fmt));
    }
}
BENCHMARK(BM_fl);

void BM_matvec(benchmark::State& state) {
    slisim::experiments::ExperimentConfig cfg;
    cfg.systems = {slisim::experiments::System::parse(state.range(1) == 0 ? "binary16" : "sli2.12")};
    cfg.dims = {static_cast<std::size_t>(state.range(0))};
    for (auto _ : state) {
        benchmark::DoNotOptimize(slisim::experiments::matvec_backward_error(cfg));
    }
}
BENCHMARK(BM_matvec)->Args({100, 0})->Args({100, 1})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
