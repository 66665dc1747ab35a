#include "viforge/diagnostics.hpp"

#include <cmath>
#include <random>

namespace viforge {

double compute_tol_simple(const VIProblem& problem, const Vector& v_k,
                          const Vector& v_km1, const Vector& Av_k,
                          const Vector& Av_km1, double gamma) {
    Vector probe = problem.project(v_k - gamma * (2.0 * Av_k - Av_km1));
    return (v_k - probe).norm() + (v_k - v_km1).norm();
}

double compute_natural_residual(const VIProblem& problem, const Vector& v,
                                double scale) {
    return (v - problem.project(v - scale * problem.op(v))).norm();
}

double lyapunov_a(const VIProblem& problem, const Vector& p_star,
                  const Vector& v_k, const Vector& v_km1, const Vector& u_k,
                  const Vector& u_km1, double lambda_km1, double sigma,
                  double theta) {
    const double one_plus = 1.0 + theta;
    Vector Av_km1 = problem.op(v_km1);
    Vector Av_k = problem.op(v_k);
    double a = (1.0 / one_plus) * (v_k - p_star).squaredNorm();
    a += theta * (u_k - p_star).squaredNorm();
    a += (theta * theta / (one_plus * one_plus)) * (v_k - u_km1).squaredNorm();
    a += 2.0 * lambda_km1 * (Av_km1 - Av_k).dot(v_k - p_star);
    a += (3.0 * sigma / 2.0) * (v_k - v_km1).squaredNorm();
    return a;
}

namespace {

Vector gaussian(int dim, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Vector g(dim);
    for (int i = 0; i < dim; ++i) g[i] = gauss(rng);
    return g;
}

} // namespace

bool check_minty_membership(const VIProblem& problem, const Vector& p_star,
                            int sample_count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (int i = 0; i < sample_count; ++i) {
        Vector q = problem.project(gaussian(problem.dim, rng));
        if (problem.op(q).dot(q - p_star) < -1e-9) return false;
    }
    return true;
}

double estimate_lipschitz(const VIProblem& problem, int pairs,
                          std::uint64_t seed, double safety) {
    std::mt19937_64 rng(seed);
    double best = 0;
    for (int i = 0; i < pairs; ++i) {
        Vector p = problem.project(gaussian(problem.dim, rng));
        Vector q = (i % 2 == 0)
                       ? problem.project(gaussian(problem.dim, rng))
                       : problem.project(p + 1e-3 * gaussian(problem.dim, rng));
        double dn = (p - q).norm();
        if (dn < 1e-14) continue;
        double ratio = (problem.op(p) - problem.op(q)).norm() / dn;
        if (ratio > best) best = ratio;
    }
    return best * safety;
}

double tol_gamma_for(double lipschitz, double delta) {
    double hi = (1.0 - 2.0 * delta) / lipschitz;
    if (hi > delta) return 0.5 * (delta + hi);
    return delta;
}

double resolve_lipschitz(const VIProblem& problem) {
    if (problem.lipschitz) return *problem.lipschitz;
    return estimate_lipschitz(problem, 2000, 0x5eedf00d, 1.1);
}

} // namespace viforge
