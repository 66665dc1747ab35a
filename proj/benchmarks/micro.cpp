#include <random>

#include <benchmark/benchmark.h>

#include <viforge/viforge.hpp>

using namespace viforge;

namespace {

Vector random_vector(int n, std::uint64_t seed, double scale) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, scale);
    Vector v(n);
    for (int i = 0; i < n; ++i) v[i] = gauss(rng);
    return v;
}

void BM_ProjectL1Ball(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Vector x = random_vector(n, 7, 2.0);
    for (auto _ : state) benchmark::DoNotOptimize(project_l1_ball(x, 60.0));
}
BENCHMARK(BM_ProjectL1Ball)->Arg(256)->Arg(1024)->Arg(4096);

void BM_ProjectHalfDisk(benchmark::State& state) {
    Vector x = random_vector(2, 11, 3.0);
    for (auto _ : state) benchmark::DoNotOptimize(project_half_disk(x));
}
BENCHMARK(BM_ProjectHalfDisk);

void BM_MomentumStep(benchmark::State& state) {
    CaseSpec spec;
    spec.id = ProblemId::Exm3;
    spec.case_id = 3;
    spec.seed = 1;
    ProblemCase pc = make_case(spec);
    SolverConfig cfg = SolverConfig::momentum_defaults();
    MomentumState st = MomentumState::init(pc.problem, pc.v0, pc.v1, pc.v1,
                                           cfg.lambda0, cfg.lambda1);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            momentum_step(pc.problem, st, cfg.theta, cfg.sigma, 1.0));
}
BENCHMARK(BM_MomentumStep);

void BM_LassoOperator(benchmark::State& state) {
    SignalParams params;
    params.seed = 3;
    SignalInstance inst = generate_instance(params);
    VIProblem problem = lasso_vi(inst);
    Vector p = random_vector(params.n, 5, 0.1);
    for (auto _ : state) benchmark::DoNotOptimize(problem.op(p));
}
BENCHMARK(BM_LassoOperator);

} // namespace

BENCHMARK_MAIN();
