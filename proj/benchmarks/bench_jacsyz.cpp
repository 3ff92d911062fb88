#include <benchmark/benchmark.h>

#include "jacsyz/jacsyz.hpp"

using namespace jacsyz;

namespace {

const Rationals Q;
const PrimeField Fp(2147483647ull);

template <class F>
Polynomial<F> main_curve(const F& field) {
    return parse_poly<F>("x0*x1*x2*(x0^2+x1^2+x2^2)", Ring<F>::make(3, field));
}

void BM_BuchbergerJacobianQ(benchmark::State& state) {
    auto h = Hypersurface<Rationals>::make(main_curve(Q));
    auto gens = jacobian_ideal(h);
    for (auto _ : state)
        benchmark::DoNotOptimize(buchberger(gens, ModuleOrder::top(TermOrder::grevlex())));
}
BENCHMARK(BM_BuchbergerJacobianQ);

void BM_BuchbergerJacobianFp(benchmark::State& state) {
    auto h = Hypersurface<PrimeField>::make(main_curve(Fp));
    auto gens = jacobian_ideal(h);
    for (auto _ : state)
        benchmark::DoNotOptimize(buchberger(gens, ModuleOrder::top(TermOrder::grevlex())));
}
BENCHMARK(BM_BuchbergerJacobianFp);

void BM_SyzygiesJacobian(benchmark::State& state) {
    auto h = Hypersurface<Rationals>::make(main_curve(Q));
    auto gens = jacobian_ideal(h);
    for (auto _ : state) benchmark::DoNotOptimize(syzygies(gens));
}
BENCHMARK(BM_SyzygiesJacobian);

void BM_MilnorResolution(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    int e = static_cast<int>(state.range(1));
    auto m = builtin_fermat(Q, n, e);
    auto h = Hypersurface<Rationals>::make(m.f);
    for (auto _ : state) benchmark::DoNotOptimize(milnor_resolution(h));
}
BENCHMARK(BM_MilnorResolution)->Args({2, 2})->Args({2, 3})->Args({3, 2});

void BM_KernelOracle(benchmark::State& state) {
    auto m = builtin_fermat(Q, 3, 2);
    auto h = Hypersurface<Rationals>::make(m.f);
    auto gens = jacobian_ideal(h);
    OracleOptions opt;
    opt.degree_cap = 64;
    for (auto _ : state)
        benchmark::DoNotOptimize(graded_kernel_dimension(gens, static_cast<int>(state.range(0)), opt));
}
BENCHMARK(BM_KernelOracle)->Arg(3)->Arg(5);

void BM_NormalCrossingCheck(benchmark::State& state) {
    auto m = builtin_fermat(Q, static_cast<int>(state.range(0)), 2);
    for (auto _ : state) benchmark::DoNotOptimize(check_normal_crossing(m));
}
BENCHMARK(BM_NormalCrossingCheck)->Arg(2)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
