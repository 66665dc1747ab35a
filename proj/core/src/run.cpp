#include "viforge/run.hpp"

#include <chrono>
#include <cmath>
#include <limits>

#include "stepper.hpp"
#include "viforge/diagnostics.hpp"

namespace viforge {

namespace {

double dist_to_solutions(const VIProblem& problem, const Vector& v) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& p : problem.known_solutions)
        best = std::min(best, (v - p).norm());
    return best;
}

} // namespace

RunResult run_solver(const VIProblem& problem, const SolverConfig& config,
                     const Vector& v0, const Vector& v1, std::uint64_t,
                     const RunOptions& options) {
    config.validate();
    check_dim(problem, v0, "v0");
    check_dim(problem, v1, "v1");

    const bool needs_lipschitz =
        config.tol_rule == TolRule::SimpleResidual ||
        config.algorithm == Algorithm::Extragradient ||
        config.algorithm == Algorithm::Popov ||
        config.algorithm == Algorithm::SubgradientExtragradient;
    const double lipschitz = needs_lipschitz ? resolve_lipschitz(problem) : 1.0;
    const double gamma = tol_gamma_for(lipschitz, config.tol_gamma_delta);

    auto stepper = detail::make_stepper(problem, config, v0, v1, lipschitz);

    const Vector* p_star = nullptr;
    if (options.record_lyapunov && config.algorithm == Algorithm::Momentum) {
        if (!problem.known_minty_solutions.empty())
            p_star = &problem.known_minty_solutions.front();
        else if (!problem.known_solutions.empty())
            p_star = &problem.known_solutions.front();
    }

    RunResult result;
    if (config.max_iter == 0) {
        result.final_point = v1;
        result.final_tol = stepper->tol(config.tol_rule, gamma);
        return result;
    }
    result.trace.reserve(
        static_cast<std::size_t>(std::min<long>(config.max_iter, 4096)));

    auto t0 = std::chrono::steady_clock::now();
    for (long it = 1; it <= config.max_iter; ++it) {
        stepper->advance();
        const Vector& v = stepper->current();
        if (!v.allFinite())
            throw NumericalError("non-finite iterate", it);

        double tol = stepper->tol(config.tol_rule, gamma);
        if (!std::isfinite(tol))
            throw NumericalError("non-finite stopping residual", it);

        IterRecord rec;
        rec.iter = it;
        rec.tol = tol;
        rec.lambda = stepper->lambda();
        rec.elapsed_s =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                .count();
        if (!problem.known_solutions.empty())
            rec.dist_opt = dist_to_solutions(problem, v);
        if (p_star) {
            const auto* ms =
                static_cast<const detail::MomentumStepper*>(stepper.get());
            const MomentumState& s = ms->state();
            rec.lyapunov =
                lyapunov_a(problem, *p_star, s.v_k, s.v_km1, s.u_k, ms->u_km1(),
                           s.lambda_km1, config.sigma, config.theta);
        }
        result.trace.push_back(std::move(rec));

        if (tol < config.eps) {
            result.converged = true;
            break;
        }
    }

    result.final_point = stepper->current();
    result.iterations = static_cast<long>(result.trace.size());
    result.final_tol = result.trace.back().tol;
    result.cpu_s = result.trace.back().elapsed_s;
    return result;
}

} // namespace viforge
