#include "viforge/config.hpp"

namespace viforge {

std::string algorithm_name(Algorithm a) {
    switch (a) {
    case Algorithm::Momentum: return "momentum";
    case Algorithm::SimpleProjection: return "simpleproj";
    case Algorithm::Extragradient: return "eg";
    case Algorithm::Popov: return "popov";
    case Algorithm::SubgradientExtragradient: return "seg";
    case Algorithm::AdaptiveGoldenRatio: return "agraal";
    }
    throw ConfigError("algorithm_name: unknown algorithm");
}

Algorithm algorithm_from_name(const std::string& s) {
    if (s == "momentum") return Algorithm::Momentum;
    if (s == "simpleproj") return Algorithm::SimpleProjection;
    if (s == "eg") return Algorithm::Extragradient;
    if (s == "popov") return Algorithm::Popov;
    if (s == "seg") return Algorithm::SubgradientExtragradient;
    if (s == "agraal") return Algorithm::AdaptiveGoldenRatio;
    throw ConfigError("unknown algorithm: " + s);
}

void SolverConfig::validate() const {
    if (theta < 0) throw ConfigError("theta must be >= 0");
    if (algorithm == Algorithm::Momentum) {
        if (sigma <= 0 || sigma >= 1)
            throw ConfigError("sigma must lie in (0,1)");
        if (sigma >= 1.0 / (3.0 * (1.0 + theta)))
            throw ConfigError("sigma must be < 1/(3(1+theta))");
    } else if (sigma <= 0) {
        throw ConfigError("sigma/alpha must be positive");
    }
    if (lambda0 <= 0 || lambda1 <= 0)
        throw ConfigError("step sizes must be positive");
    if (eps <= 0) throw ConfigError("eps must be positive");
    if (max_iter < 0) throw ConfigError("max_iter must be >= 0");
    if (gamma_seq.c < 0) throw ConfigError("gamma sequence scale must be >= 0");
    if (gamma_seq.p <= 1.0) throw ConfigError("gamma sequence must be summable (p > 1)");
    if (tol_gamma_delta <= 0 || tol_gamma_delta >= 0.5)
        throw ConfigError("tol gamma delta must lie in (0, 0.5)");
    if (algorithm == Algorithm::AdaptiveGoldenRatio) {
        if (phi <= 1 || phi > (1.0 + std::sqrt(5.0)) / 2.0)
            throw ConfigError("phi must lie in (1, golden ratio]");
        if (lambda_bar <= 0) throw ConfigError("lambda_bar must be positive");
    }
}

/* reference tuning: theta = 0.01, sigma = 0.4/(2+2 theta), lambda0 = lambda1
   = 0.01, gamma_k = 100/(k+1)^1.1 */
SolverConfig SolverConfig::momentum_defaults() {
    SolverConfig c;
    c.algorithm = Algorithm::Momentum;
    c.theta = 0.01;
    c.sigma = 0.4 * (1.0 / (2.0 + 2.0 * c.theta));
    c.lambda0 = 0.01;
    c.lambda1 = 0.01;
    c.tol_rule = TolRule::SimpleResidual;
    return c;
}

/* reference tuning: alpha = 0.26, u_k = 100/(k+1)^1.1, eta0 = 0.1, eta1 = 0.01 */
SolverConfig SolverConfig::simpleproj_defaults() {
    SolverConfig c;
    c.algorithm = Algorithm::SimpleProjection;
    c.theta = 0.0;
    c.sigma = 0.26;
    c.lambda0 = 0.1;
    c.lambda1 = 0.01;
    c.tol_rule = TolRule::SimpleResidual;
    return c;
}

/* lambda = 0.9/L, resolved against the problem at run time */
SolverConfig SolverConfig::extragradient_defaults() {
    SolverConfig c;
    c.algorithm = Algorithm::Extragradient;
    c.tol_rule = TolRule::NaturalResidual;
    return c;
}

/* lambda = 0.9/(3L) */
SolverConfig SolverConfig::popov_defaults() {
    SolverConfig c;
    c.algorithm = Algorithm::Popov;
    c.tol_rule = TolRule::NaturalResidual;
    return c;
}

/* lambda = 0.9/L */
SolverConfig SolverConfig::subgradient_extragradient_defaults() {
    SolverConfig c;
    c.algorithm = Algorithm::SubgradientExtragradient;
    c.tol_rule = TolRule::NaturalResidual;
    return c;
}

/* phi = 1.5, lambda0 = lambda1 = 2, lambda_bar = 4 */
SolverConfig SolverConfig::agraal_defaults() {
    SolverConfig c;
    c.algorithm = Algorithm::AdaptiveGoldenRatio;
    c.phi = 1.5;
    c.lambda0 = 2.0;
    c.lambda1 = 2.0;
    c.lambda_bar = 4.0;
    c.tol_rule = TolRule::NaturalResidual;
    return c;
}

SolverConfig SolverConfig::defaults_for(Algorithm a) {
    switch (a) {
    case Algorithm::Momentum: return momentum_defaults();
    case Algorithm::SimpleProjection: return simpleproj_defaults();
    case Algorithm::Extragradient: return extragradient_defaults();
    case Algorithm::Popov: return popov_defaults();
    case Algorithm::SubgradientExtragradient: return subgradient_extragradient_defaults();
    case Algorithm::AdaptiveGoldenRatio: return agraal_defaults();
    }
    throw ConfigError("defaults_for: unknown algorithm");
}

} // namespace viforge
