#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "viforge/config.hpp"
#include "viforge/types.hpp"

namespace viforge {

// One row of a run trace.
struct IterRecord {
    long iter = 0;
    double tol = 0;
    double lambda = 0;
    double elapsed_s = 0;
    std::optional<double> dist_opt;   // distance to nearest known solution
    std::optional<double> lyapunov;   // momentum energy, when requested
};

struct RunResult {
    Vector final_point;
    long iterations = 0;    // completed iterations (trace rows)
    bool converged = false;
    double final_tol = 0;
    double cpu_s = 0;
    std::vector<IterRecord> trace;
};

struct RunOptions {
    bool record_lyapunov = false;   // momentum only; needs a known solution
};

// Drives the configured algorithm from (v0, v1) until the stopping rule drops
// below config.eps or max_iter iterations elapse.  Stopping rules:
//   SimpleResidual:  ||v_k - P_C(v_k - g(2 A v_k - A v_{k-1}))|| + ||v_k - v_{k-1}||
//                    with g from tol_gamma_for(resolve_lipschitz(problem), delta)
//   NaturalResidual: ||v - P_C(v - A v)||
// Cached operator values are reused by the SimpleResidual rule, so momentum
// and simple projection runs cost one evaluation per iteration.  dist_opt is
// recorded whenever the problem carries known solutions.  Non-finite iterates
// raise NumericalError tagged with the iteration index.  max_iter = 0 returns
// v1 unconverged with an empty trace.  All steps are deterministic; the seed
// is reserved interface surface for randomized variants.
RunResult run_solver(const VIProblem& problem, const SolverConfig& config,
                     const Vector& v0, const Vector& v1,
                     std::uint64_t seed = 0, const RunOptions& options = {});

} // namespace viforge
