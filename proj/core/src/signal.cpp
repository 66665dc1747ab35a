#include "viforge/signal.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <random>

#include "stepper.hpp"
#include "viforge/projections.hpp"

namespace viforge {

namespace {

Vector gaussian(Eigen::Index n, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Vector g(n);
    for (Eigen::Index i = 0; i < n; ++i) g[i] = gauss(rng);
    return g;
}

} // namespace

SignalInstance generate_instance(const SignalParams& params) {
    if (params.n <= 0 || params.m <= 0)
        throw ConfigError("generate_instance: sizes must be positive");
    if (params.sparsity < 0 || params.sparsity > params.n)
        throw ConfigError("generate_instance: sparsity must lie in 0..n");
    if (params.l < params.sparsity)
        throw ConfigError("generate_instance: l1 radius below ||x_true||_1");
    if (params.noise_std < 0)
        throw ConfigError("generate_instance: negative noise scale");

    std::mt19937_64 rng(params.seed);
    std::normal_distribution<double> gauss(0.0, 1.0);

    SignalInstance inst;
    inst.params = params;
    inst.l = params.l;
    inst.B.resize(params.m, params.n);
    for (int i = 0; i < params.m; ++i)
        for (int j = 0; j < params.n; ++j) inst.B(i, j) = gauss(rng);

    std::vector<int> idx(params.n);
    std::iota(idx.begin(), idx.end(), 0);
    std::shuffle(idx.begin(), idx.end(), rng);
    inst.x_true = Vector::Zero(params.n);
    std::bernoulli_distribution coin(0.5);
    for (int j = 0; j < params.sparsity; ++j)
        inst.x_true[idx[j]] = coin(rng) ? 1.0 : -1.0;

    inst.y = inst.B * inst.x_true + params.noise_std * gaussian(params.m, rng);
    return inst;
}

VIProblem lasso_vi(const SignalInstance& instance) {
    const double l = instance.l;
    Matrix Bt = instance.B.transpose();
    Matrix B = instance.B;
    Vector y = instance.y;

    VIProblem problem;
    problem.dim = static_cast<int>(instance.B.cols());
    problem.op = [B = std::move(B), Bt, y = std::move(y)](const Vector& p) {
        return Vector(Bt * (B * p - y));
    };
    problem.project = [l](const Vector& x) { return project_l1_ball(x, l); };
    problem.name = "lasso";

    /* ||B^T B||_2 by power iteration */
    std::mt19937_64 rng(instance.params.seed);
    Vector w = gaussian(instance.B.cols(), rng);
    w.normalize();
    double nrm = 0;
    for (int i = 0; i < 200; ++i) {
        w = Bt * (instance.B * w);
        nrm = w.norm();
        if (nrm == 0) break;
        w /= nrm;
    }
    problem.lipschitz = nrm;
    return problem;
}

RecoveryResult run_recovery(const SignalInstance& instance,
                            const SolverConfig& config,
                            const RecoveryOptions& options) {
    config.validate();
    const auto n = instance.B.cols();
    VIProblem problem = lasso_vi(instance);

    auto mse = [&](const Vector& p) {
        return (p - instance.x_true).squaredNorm() / static_cast<double>(n);
    };

    Vector v0 = Vector::Zero(n);
    // v1 stream decorrelated from the instance stream
    std::mt19937_64 rng(~instance.params.seed);
    Vector v1 = 0.01 * gaussian(n, rng);

    RecoveryResult result;
    result.mse_trace.push_back(mse(v0));
    result.elapsed_trace.push_back(0.0);
    if (result.mse_trace.front() < options.mse_tol) {
        result.p = v0;
        result.reached = true;
        result.final_mse = result.mse_trace.front();
        return result;
    }

    auto stepper =
        detail::make_stepper(problem, config, v0, v1, *problem.lipschitz);

    auto t0 = std::chrono::steady_clock::now();
    for (long it = 1; it <= options.max_iter; ++it) {
        stepper->advance();
        const Vector& p = stepper->current();
        if (!p.allFinite()) throw NumericalError("non-finite iterate", it);

        double m = mse(p);
        result.mse_trace.push_back(m);
        result.elapsed_trace.push_back(
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                .count());
        result.iterations = it;
        if (m < options.mse_tol) {
            result.reached = true;
            break;
        }
    }

    result.p = stepper->current();
    result.final_mse = result.mse_trace.back();
    result.cpu_s = result.elapsed_trace.back();
    return result;
}

} // namespace viforge
