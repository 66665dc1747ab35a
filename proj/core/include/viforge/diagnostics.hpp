#pragma once

#include <cstdint>

#include "viforge/types.hpp"

namespace viforge {

// TOL = ||v_k - P_C(v_k - gamma (2 A v_k - A v_{k-1}))|| + ||v_k - v_{k-1}||,
// the stopping quantity used by the momentum and simple projection methods.
double compute_tol_simple(const VIProblem& problem, const Vector& v_k,
                          const Vector& v_km1, const Vector& Av_k,
                          const Vector& Av_km1, double gamma);

// ||v - P_C(v - scale A v)||; zero exactly at solutions.  Stopping rule for
// the baseline methods.
double compute_natural_residual(const VIProblem& problem, const Vector& v,
                                double scale);

// Composite energy monitored on momentum runs:
//   a_k = (1/(1+theta)) ||v_k - p*||^2 + theta ||u_k - p*||^2
//       + (theta^2/(1+theta)^2) ||v_k - u_{k-1}||^2
//       + 2 lambda_{k-1} <A v_{k-1} - A v_k, v_k - p*>
//       + (3 sigma / 2) ||v_k - v_{k-1}||^2
double lyapunov_a(const VIProblem& problem, const Vector& p_star,
                  const Vector& v_k, const Vector& v_km1, const Vector& u_k,
                  const Vector& u_km1, double lambda_km1, double sigma,
                  double theta);

// Spot check of <A q, q - p*> >= -1e-9 on sample_count projected Gaussian
// draws; a necessary condition for p* solving the Minty problem, not a proof.
bool check_minty_membership(const VIProblem& problem, const Vector& p_star,
                            int sample_count, std::uint64_t seed);

// Empirical Lipschitz bound: max ||A p - A q|| / ||p - q|| over `pairs`
// seeded samples in C (alternating far pairs and 1e-3-scale local pairs),
// multiplied by `safety`.
double estimate_lipschitz(const VIProblem& problem, int pairs,
                          std::uint64_t seed, double safety);

// gamma for the TOL formula: midpoint of (delta, (1-2 delta)/L) when that
// interval is nonempty, else delta.
double tol_gamma_for(double lipschitz, double delta);

// L used for TOL/baseline step sizes: the problem's own constant if present,
// else the seeded empirical estimate with a 1.1 safety factor.
double resolve_lipschitz(const VIProblem& problem);

} // namespace viforge
