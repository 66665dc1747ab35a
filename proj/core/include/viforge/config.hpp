#pragma once

#include <cmath>
#include <string>

#include "viforge/types.hpp"

namespace viforge {

enum class Algorithm {
    Momentum,
    SimpleProjection,
    Extragradient,
    Popov,
    SubgradientExtragradient,
    AdaptiveGoldenRatio,
};

std::string algorithm_name(Algorithm a);
Algorithm algorithm_from_name(const std::string& s);

enum class TolRule { SimpleResidual, NaturalResidual };

// gamma_k = c / (k+1)^p, summable for p > 1.  Also used for the simple
// projection method's u_k sequence.
struct GammaSeq {
    double c = 100.0;
    double p = 1.1;
    double operator()(long k) const { return c / std::pow(static_cast<double>(k) + 1.0, p); }
};

struct SolverConfig {
    Algorithm algorithm = Algorithm::Momentum;
    double theta = 0.0;       // momentum weight, >= 0
    double sigma = 0.2;       // adaptive-step ratio bound, in (0,1); alpha for SimpleProjection
    double lambda0 = 0.01;
    double lambda1 = 0.01;
    GammaSeq gamma_seq;
    double eps = 1e-5;
    long max_iter = 1000;
    TolRule tol_rule = TolRule::SimpleResidual;
    double tol_gamma_delta = 0.17; // delta in the TOL gamma interval (delta, (1-2delta)/L)
    // adaptive golden ratio extras
    double phi = 1.5;
    double lambda_bar = 4.0;

    void validate() const;

    // Tuning used for the reference experiments, per algorithm.
    static SolverConfig momentum_defaults();
    static SolverConfig simpleproj_defaults();
    static SolverConfig extragradient_defaults();
    static SolverConfig popov_defaults();
    static SolverConfig subgradient_extragradient_defaults();
    static SolverConfig agraal_defaults();
    static SolverConfig defaults_for(Algorithm a);
};

} // namespace viforge
