#include "dialg/examples.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace dialg;

namespace {

const Field Q = Field::rationals();

void BM_CoboundaryMatrix(benchmark::State& state)
{
    const Dialgebra n = examples::noncommutative_n(Q);
    const Representation adj = adjoint_rep(n);
    const int degree = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(coboundary_matrix(n, adj, degree));
}
BENCHMARK(BM_CoboundaryMatrix)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_Rank(benchmark::State& state)
{
    const Dialgebra n = examples::noncommutative_n(Q);
    const Matrix d = coboundary_matrix(n, adjoint_rep(n), static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(rank(d));
    state.counters["cols"] = static_cast<double>(d.cols());
}
BENCHMARK(BM_Rank)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_RankGF(benchmark::State& state)
{
    const Field f = Field::gf(7919);
    const Dialgebra n = examples::noncommutative_n(f);
    const Matrix d = coboundary_matrix(n, adjoint_rep(n), static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(rank(d));
}
BENCHMARK(BM_RankGF)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_ElementwiseCoboundary(benchmark::State& state)
{
    const Dialgebra m = examples::noncommutative_m(Q);
    const Representation adj = adjoint_rep(m);
    std::mt19937_64 rng(1);
    const Cochain f = random_cochain(Q, cochain_shape(m, adj, static_cast<int>(state.range(0))), rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(coboundary(m, adj, f));
}
BENCHMARK(BM_ElementwiseCoboundary)->DenseRange(1, 3)->Unit(benchmark::kMicrosecond);

void BM_MorphismCohomology(benchmark::State& state)
{
    const DialgebraMorphism psi = examples::find_morphism(Q, "proj_N_K");
    const int degree = static_cast<int>(state.range(0));
    for (auto _ : state) {
        const MorphismComplex c(psi); // fresh cache each iteration
        benchmark::DoNotOptimize(c.cohomology_dim(degree));
    }
}
BENCHMARK(BM_MorphismCohomology)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_Obstruction(benchmark::State& state)
{
    const MorphismComplex c(identity_morphism(examples::noncommutative_n(Q)));
    std::mt19937_64 rng(3);
    GeneratorOptions opts;
    opts.order = static_cast<int>(state.range(0));
    const TruncatedDeformation th = random_deformation(c, opts, rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(obstruction(th));
}
BENCHMARK(BM_Obstruction)->DenseRange(1, 4)->Unit(benchmark::kMicrosecond);

void BM_ExtendStep(benchmark::State& state)
{
    const MorphismComplex c(identity_morphism(examples::noncommutative_n(Q)));
    std::mt19937_64 rng(4);
    GeneratorOptions opts;
    opts.order = static_cast<int>(state.range(0));
    const TruncatedDeformation th = random_deformation(c, opts, rng);
    c.solver(2); // warm the cached elimination
    for (auto _ : state)
        benchmark::DoNotOptimize(extend_step(c, th));
}
BENCHMARK(BM_ExtendStep)->DenseRange(1, 4)->Unit(benchmark::kMicrosecond);

void BM_VerifyDeformation(benchmark::State& state)
{
    const TruncatedDeformation th = examples::one_plus_t(Q, static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_deformation(th));
}
BENCHMARK(BM_VerifyDeformation)->DenseRange(1, 6)->Unit(benchmark::kMicrosecond);

} // namespace

BENCHMARK_MAIN();
