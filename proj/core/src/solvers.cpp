#include "viforge/solvers.hpp"

namespace viforge {

MomentumState MomentumState::init(const VIProblem& problem, const Vector& v0,
                                  const Vector& v1, const Vector& u1,
                                  double lambda0, double lambda1) {
    check_dim(problem, v0, "v0");
    check_dim(problem, v1, "v1");
    MomentumState s;
    s.v_km1 = v0;
    s.v_k = v1;
    s.u_k = u1;
    s.lambda_km1 = lambda0;
    s.lambda_k = lambda1;
    s.Av_km1 = problem.op(v0);
    s.Av_k = problem.op(v1);
    s.k = 1;
    return s;
}

SimpleProjState SimpleProjState::init(const VIProblem& problem, const Vector& xi0,
                                      const Vector& xi1, double eta0, double eta1,
                                      GammaSeq u_seq, double alpha) {
    check_dim(problem, xi0, "xi0");
    check_dim(problem, xi1, "xi1");
    SimpleProjState s;
    s.xi_km1 = xi0;
    s.xi_k = xi1;
    s.eta_km1 = eta0;
    s.eta_k = eta1;
    s.Axi_km1 = problem.op(xi0);
    s.Axi_k = problem.op(xi1);
    s.u_seq = u_seq;
    s.alpha = alpha;
    s.k = 1;
    return s;
}

GoldenRatioState GoldenRatioState::init(const VIProblem& problem, const Vector& tau0,
                                        const Vector& tau1, double lambda0,
                                        double phi, double lambda_bar) {
    check_dim(problem, tau0, "tau0");
    check_dim(problem, tau1, "tau1");
    GoldenRatioState s;
    s.tau_km1 = tau0;
    s.tau_k = tau1;
    s.xi_k = tau1;
    s.Atau_km1 = problem.op(tau0);
    s.Atau_k = problem.op(tau1);
    s.lambda_km1 = lambda0;
    s.lambda_k = lambda0;
    s.theta_k = 1.0;
    s.phi = phi;
    s.rho = 1.0 / phi + 1.0 / (phi * phi);
    s.lambda_bar = lambda_bar;
    return s;
}

double step_size_update(const Vector& v_k, const Vector& v_kp1,
                        const Vector& Av_k, const Vector& Av_kp1,
                        double lambda_k, double sigma, double gamma_k,
                        bool* decreased) {
    double dv = (v_k - v_kp1).norm();
    double dA = (Av_k - Av_kp1).norm();
    if (dA * lambda_k > sigma * dv) {
        if (decreased) *decreased = true;
        return sigma * dv / dA;
    }
    if (decreased) *decreased = false;
    return (1.0 + gamma_k) * lambda_k;
}

MomentumState momentum_step(const VIProblem& problem, const MomentumState& state,
                            double theta, double sigma, double gamma_k) {
    const double one_plus = 1.0 + theta;
    Vector w = (1.0 / one_plus) * state.v_k + (theta / one_plus) * state.u_k;
    Vector v_new = problem.project(w - state.lambda_k * state.Av_k -
                                   state.lambda_km1 * (state.Av_k - state.Av_km1));
    Vector u_new = (1.0 / one_plus) * v_new + (theta / one_plus) * state.u_k;
    Vector Av_new = problem.op(v_new);

    MomentumState next;
    next.lambda_k = step_size_update(state.v_k, v_new, state.Av_k, Av_new,
                                     state.lambda_k, sigma, gamma_k,
                                     &next.decreased);
    next.v_km1 = state.v_k;
    next.v_k = std::move(v_new);
    next.u_k = std::move(u_new);
    next.lambda_km1 = state.lambda_k;
    next.Av_km1 = state.Av_k;
    next.Av_k = std::move(Av_new);
    next.k = state.k + 1;
    return next;
}

SimpleProjState simple_projection_step(const VIProblem& problem,
                                       const SimpleProjState& state) {
    Vector xi_new = problem.project(state.xi_k - state.eta_k * state.Axi_k -
                                    state.eta_km1 * (state.Axi_k - state.Axi_km1));
    Vector Axi_new = problem.op(xi_new);

    double grown = state.eta_k + state.u_seq(state.k);
    double dA = (state.Axi_k - Axi_new).norm();
    double eta_new = grown;
    if (dA > 0) {
        double ratio = state.alpha * (state.xi_k - xi_new).norm() / dA;
        eta_new = std::min(ratio, grown);
    }

    SimpleProjState next;
    next.xi_km1 = state.xi_k;
    next.xi_k = std::move(xi_new);
    next.eta_km1 = state.eta_k;
    next.eta_k = eta_new;
    next.Axi_km1 = state.Axi_k;
    next.Axi_k = std::move(Axi_new);
    next.u_seq = state.u_seq;
    next.alpha = state.alpha;
    next.k = state.k + 1;
    return next;
}

Vector extragradient_step(const VIProblem& problem, const Vector& xi_k,
                          double lambda) {
    Vector tau = problem.project(xi_k - lambda * problem.op(xi_k));
    return problem.project(xi_k - lambda * problem.op(tau));
}

std::pair<Vector, Vector> popov_step(const VIProblem& problem, const Vector& xi_k,
                                     const Vector& tau_k, double lambda) {
    Vector Atau = problem.op(tau_k);
    Vector xi_new = problem.project(xi_k - lambda * Atau);
    Vector tau_new = problem.project(xi_new - lambda * Atau);
    return {std::move(xi_new), std::move(tau_new)};
}

Vector subgradient_extragradient_step(const VIProblem& problem,
                                      const Vector& xi_k, double lambda) {
    Vector y = xi_k - lambda * problem.op(xi_k);
    Vector tau = problem.project(y);
    Vector n = y - tau;
    Vector z = xi_k - lambda * problem.op(tau);
    double nn = n.squaredNorm();
    if (nn == 0) return z;
    double c = n.dot(z - tau);
    if (c <= 0) return z;
    return z - (c / nn) * n;
}

GoldenRatioState agraal_step(const VIProblem& problem, const GoldenRatioState& state) {
    double lambda_new = std::min(state.rho * state.lambda_k, state.lambda_bar);
    double dA2 = (state.Atau_k - state.Atau_km1).squaredNorm();
    if (dA2 > 0) {
        double dtau2 = (state.tau_k - state.tau_km1).squaredNorm();
        double local = state.phi * state.theta_k / (4.0 * state.lambda_k) * dtau2 / dA2;
        lambda_new = std::min(lambda_new, local);
    }
    double theta_new = state.phi * lambda_new / state.lambda_k;

    Vector xi = ((state.phi - 1.0) * state.tau_k + state.tau_km1) / state.phi;
    Vector tau_new = problem.project(xi - lambda_new * state.Atau_k);

    GoldenRatioState next = state;
    next.tau_km1 = state.tau_k;
    next.tau_k = tau_new;
    next.xi_k = std::move(xi);
    next.Atau_km1 = state.Atau_k;
    next.Atau_k = problem.op(tau_new);
    next.lambda_km1 = state.lambda_k;
    next.lambda_k = lambda_new;
    next.theta_k = theta_new;
    return next;
}

} // namespace viforge
