#pragma once

#include "viforge/config.hpp"
#include "viforge/types.hpp"

namespace viforge {

// State for the momentum projection algorithm.  Av values are cached so each
// step adds exactly one operator evaluation.
struct MomentumState {
    Vector v_k, v_km1, u_k;
    double lambda_k = 0, lambda_km1 = 0;
    Vector Av_k, Av_km1;
    long k = 1;
    bool decreased = false; // last step took the ratio (decrease) branch

    static MomentumState init(const VIProblem& problem, const Vector& v0,
                              const Vector& v1, const Vector& u1,
                              double lambda0, double lambda1);
};

// State for the adaptive golden ratio baseline.
struct GoldenRatioState {
    Vector tau_k, tau_km1, xi_k;
    Vector Atau_k, Atau_km1;
    double lambda_k = 0, lambda_km1 = 0;
    double theta_k = 1.0;
    double phi = 1.5;
    double rho = 0;        // 1/phi + 1/phi^2
    double lambda_bar = 4.0;

    static GoldenRatioState init(const VIProblem& problem, const Vector& tau0,
                                 const Vector& tau1, double lambda0,
                                 double phi, double lambda_bar);
};

// State for the simple projection method.
struct SimpleProjState {
    Vector xi_k, xi_km1;
    Vector Axi_k, Axi_km1;
    double eta_k = 0, eta_km1 = 0;
    GammaSeq u_seq;    // the u_k increment sequence
    double alpha = 0.26;
    long k = 1;

    static SimpleProjState init(const VIProblem& problem, const Vector& xi0,
                                const Vector& xi1, double eta0, double eta1,
                                GammaSeq u_seq, double alpha);
};

// Adaptive step update:
//   if ||Av_k - Av_{k+1}|| > (sigma/lambda_k) ||v_k - v_{k+1}||
//       lambda_{k+1} = sigma ||v_k - v_{k+1}|| / ||Av_k - Av_{k+1}||
//   else
//       lambda_{k+1} = (1 + gamma_k) lambda_k
// The strict inequality makes the division branch safe.  *decreased reports
// which branch was taken.
double step_size_update(const Vector& v_k, const Vector& v_kp1,
                        const Vector& Av_k, const Vector& Av_kp1,
                        double lambda_k, double sigma, double gamma_k,
                        bool* decreased = nullptr);

// One iteration of the momentum algorithm:
//   w_k     = (1/(1+theta)) v_k + (theta/(1+theta)) u_k
//   v_{k+1} = P_C(w_k - lambda_k A v_k - lambda_{k-1}(A v_k - A v_{k-1}))
//   u_{k+1} = (1/(1+theta)) v_{k+1} + (theta/(1+theta)) u_k
// followed by step_size_update.  gamma_k is the growth value for this k.
MomentumState momentum_step(const VIProblem& problem, const MomentumState& state,
                            double theta, double sigma, double gamma_k);

// One iteration of the simple projection method:
//   xi_{k+1}  = P_C(xi_k - eta_k A xi_k - eta_{k-1}(A xi_k - A xi_{k-1}))
//   eta_{k+1} = min(alpha ||xi_k - xi_{k+1}|| / ||A xi_k - A xi_{k+1}||,
//                   eta_k + u_k)        when A xi_k != A xi_{k+1}
//             = eta_k + u_k             otherwise
SimpleProjState simple_projection_step(const VIProblem& problem,
                                       const SimpleProjState& state);

// tau_k = P_C(xi_k - lambda A xi_k); xi_{k+1} = P_C(xi_k - lambda A tau_k).
// Two projections, two operator evaluations.
Vector extragradient_step(const VIProblem& problem, const Vector& xi_k,
                          double lambda);

// xi_{k+1} = P_C(xi_k - lambda A tau_k); tau_{k+1} = P_C(xi_{k+1} - lambda A tau_k).
// A tau_k is evaluated once and reused.
std::pair<Vector, Vector> popov_step(const VIProblem& problem, const Vector& xi_k,
                                     const Vector& tau_k, double lambda);

// tau_k = P_C(xi_k - lambda A xi_k); D_k = {w: <n, w - tau_k> <= 0} with
// n = xi_k - lambda A xi_k - tau_k; xi_{k+1} = P_{D_k}(xi_k - lambda A tau_k)
// in closed form.  n = 0 degenerates D_k to the whole space.
Vector subgradient_extragradient_step(const VIProblem& problem,
                                      const Vector& xi_k, double lambda);

// xi_k = ((phi-1) tau_k + tau_{k-1}) / phi; tau_{k+1} = P_C(xi_k - lambda_k A tau_k)
// with lambda_k = min{rho lambda_{k-1},
//                     (phi theta_{k-1} / (4 lambda_{k-1})) ||dtau||^2/||dA||^2,
//                     lambda_bar} and theta_k = lambda_k phi / lambda_{k-1}.
// The middle term is skipped when A tau_k = A tau_{k-1}.
GoldenRatioState agraal_step(const VIProblem& problem, const GoldenRatioState& state);

} // namespace viforge
