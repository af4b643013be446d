#include <benchmark/benchmark.h>

#include "fnls/diagnostics.hpp"
#include "fnls/dynamics.hpp"
#include "fnls/field_gen.hpp"
#include "fnls/quadrature.hpp"

using namespace fnls;

static void BM_StrangStep3D(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Grid g = make_grid(3, n, 20.0);
    auto params = make_params(3, 0.9, 3.0, Sign::focusing);
    ComplexField u = gaussian_field(g, 1.0, 2.0);
    for (auto _ : state) {
        u = strang_step(u, 1e-3, params);
        benchmark::DoNotOptimize(u.values.data());
    }
    state.SetItemsProcessed(state.iterations() * g.size());
}
BENCHMARK(BM_StrangStep3D)->Arg(32)->Arg(48)->Arg(64);

static void BM_VirialRate3D(benchmark::State& state) {
    const int n = 48;
    Grid g = make_grid(3, n, 20.0);
    auto params = make_params(3, 0.9, 3.0, Sign::focusing);
    ComplexField u = gaussian_field(g, 1.0, 2.0);
    MorawetzWeight w = build_morawetz_weight(g, 6.0, 0.25);
    auto quad = build_lambda_quadrature(0.9, static_cast<int>(state.range(0)),
                                        default_lambda0(g));
    for (auto _ : state) {
        benchmark::DoNotOptimize(virial_rhs(u, w, params, &quad));
    }
}
BENCHMARK(BM_VirialRate3D)->Arg(48)->Arg(96);

static void BM_LambdaQuadratureBuild(benchmark::State& state) {
    for (auto _ : state) {
        auto q = build_lambda_quadrature(0.75, static_cast<int>(state.range(0)), 10.0);
        benchmark::DoNotOptimize(q.nodes.data());
    }
}
BENCHMARK(BM_LambdaQuadratureBuild)->Arg(200)->Arg(800);

BENCHMARK_MAIN();
