#pragma once

#include <cstdint>
#include <vector>

#include "viforge/config.hpp"
#include "viforge/types.hpp"

namespace viforge {

struct SignalParams {
    int n = 1024;      // signal length
    int m = 512;       // measurements
    int sparsity = 60; // nonzeros in x_true
    double l = 60;     // l1 ball radius
    double noise_std = 1e-3;
    std::uint64_t seed = 0;
};

struct SignalInstance {
    Matrix B;          // m x n measurement matrix
    Vector x_true;     // s-sparse, entries +-1
    Vector y;          // B x_true + noise
    double l = 60;
    SignalParams params;
};

// Draws B ~ N(0,1)^{m x n}, x_true with `sparsity` random +-1 entries, and
// y = B x_true + noise_std * N(0,1)^m, all from one mt19937_64 stream.
SignalInstance generate_instance(const SignalParams& params);

// VI formulation of the recovery problem: A p = B^T (B p - y) over the l1
// ball of radius l.  Lipschitz constant estimated as ||B^T B||_2 via 200
// power iterations seeded from the instance seed.
VIProblem lasso_vi(const SignalInstance& instance);

struct RecoveryResult {
    Vector p;               // recovered signal
    long iterations = 0;
    bool reached = false;   // MSE dropped below mse_tol
    double final_mse = 0;
    double cpu_s = 0;
    std::vector<double> mse_trace;       // mse_trace[0] = MSE(v0)
    std::vector<double> elapsed_trace;   // seconds, same indexing
};

struct RecoveryOptions {
    double mse_tol = 1e-6;
    long max_iter = 1000;
};

// Runs the configured algorithm on lasso_vi(instance) from v0 = 0,
// v1 = 0.01 * N(0,1)^n (same stream policy as generate_instance) and stops
// when MSE(p) = ||p - x_true||^2 / n falls below mse_tol.
RecoveryResult run_recovery(const SignalInstance& instance,
                            const SolverConfig& config,
                            const RecoveryOptions& options = {});

} // namespace viforge
