#pragma once

// Internal iteration drivers shared by run_solver and run_recovery; not part
// of the installed interface.

#include <memory>

#include "viforge/diagnostics.hpp"
#include "viforge/solvers.hpp"

namespace viforge::detail {

// Fallback TOL for algorithms without cached operator values.
inline double tol_simple_fresh(const VIProblem& problem, const Vector& v_k,
                               const Vector& v_km1, double gamma) {
    return compute_tol_simple(problem, v_k, v_km1, problem.op(v_k),
                              problem.op(v_km1), gamma);
}

class Stepper {
  public:
    virtual ~Stepper() = default;
    virtual void advance() = 0;
    virtual const Vector& current() const = 0;
    virtual const Vector& previous() const = 0;
    // step size that produced current()
    virtual double lambda() const = 0;
    virtual double tol(TolRule rule, double gamma) const = 0;
};

class MomentumStepper : public Stepper {
  public:
    MomentumStepper(const VIProblem& problem, const SolverConfig& config,
                    const Vector& v0, const Vector& v1)
        : problem_(problem), config_(config),
          state_(MomentumState::init(problem, v0, v1, v1, config.lambda0,
                                     config.lambda1)),
          u_km1_(state_.u_k), lambda_used_(config.lambda1) {}

    void advance() override {
        u_km1_ = state_.u_k;
        lambda_used_ = state_.lambda_k;
        state_ = momentum_step(problem_, state_, config_.theta, config_.sigma,
                               config_.gamma_seq(state_.k));
    }

    const Vector& current() const override { return state_.v_k; }
    const Vector& previous() const override { return state_.v_km1; }
    double lambda() const override { return lambda_used_; }

    double tol(TolRule rule, double gamma) const override {
        if (rule == TolRule::SimpleResidual)
            return compute_tol_simple(problem_, state_.v_k, state_.v_km1,
                                      state_.Av_k, state_.Av_km1, gamma);
        return (state_.v_k - problem_.project(state_.v_k - state_.Av_k)).norm();
    }

    const MomentumState& state() const { return state_; }
    const Vector& u_km1() const { return u_km1_; }

  private:
    const VIProblem& problem_;
    const SolverConfig& config_;
    MomentumState state_;
    Vector u_km1_;
    double lambda_used_;
};

class SimpleProjStepper : public Stepper {
  public:
    SimpleProjStepper(const VIProblem& problem, const SolverConfig& config,
                      const Vector& v0, const Vector& v1)
        : problem_(problem),
          state_(SimpleProjState::init(problem, v0, v1, config.lambda0,
                                       config.lambda1, config.gamma_seq,
                                       config.sigma)),
          eta_used_(config.lambda1) {}

    void advance() override {
        eta_used_ = state_.eta_k;
        state_ = simple_projection_step(problem_, state_);
    }

    const Vector& current() const override { return state_.xi_k; }
    const Vector& previous() const override { return state_.xi_km1; }
    double lambda() const override { return eta_used_; }

    double tol(TolRule rule, double gamma) const override {
        if (rule == TolRule::SimpleResidual)
            return compute_tol_simple(problem_, state_.xi_k, state_.xi_km1,
                                      state_.Axi_k, state_.Axi_km1, gamma);
        return (state_.xi_k - problem_.project(state_.xi_k - state_.Axi_k)).norm();
    }

  private:
    const VIProblem& problem_;
    SimpleProjState state_;
    double eta_used_;
};

class ExtragradientStepper : public Stepper {
  public:
    ExtragradientStepper(const VIProblem& problem, const Vector& v1, double lambda)
        : problem_(problem), xi_k_(problem.project(v1)), xi_km1_(v1),
          lambda_(lambda) {}

    void advance() override {
        Vector next = extragradient_step(problem_, xi_k_, lambda_);
        xi_km1_ = std::move(xi_k_);
        xi_k_ = std::move(next);
    }

    const Vector& current() const override { return xi_k_; }
    const Vector& previous() const override { return xi_km1_; }
    double lambda() const override { return lambda_; }

    double tol(TolRule rule, double gamma) const override {
        if (rule == TolRule::SimpleResidual)
            return tol_simple_fresh(problem_, xi_k_, xi_km1_, gamma);
        return compute_natural_residual(problem_, xi_k_, 1.0);
    }

  private:
    const VIProblem& problem_;
    Vector xi_k_, xi_km1_;
    double lambda_;
};

class PopovStepper : public Stepper {
  public:
    PopovStepper(const VIProblem& problem, const Vector& v0, const Vector& v1,
                 double lambda)
        : problem_(problem), xi_k_(problem.project(v1)), xi_km1_(v1),
          tau_k_(problem.project(v0)), lambda_(lambda) {}

    void advance() override {
        auto [xi_new, tau_new] = popov_step(problem_, xi_k_, tau_k_, lambda_);
        xi_km1_ = std::move(xi_k_);
        xi_k_ = std::move(xi_new);
        tau_k_ = std::move(tau_new);
    }

    const Vector& current() const override { return xi_k_; }
    const Vector& previous() const override { return xi_km1_; }
    double lambda() const override { return lambda_; }

    double tol(TolRule rule, double gamma) const override {
        if (rule == TolRule::SimpleResidual)
            return tol_simple_fresh(problem_, xi_k_, xi_km1_, gamma);
        return compute_natural_residual(problem_, xi_k_, 1.0);
    }

  private:
    const VIProblem& problem_;
    Vector xi_k_, xi_km1_, tau_k_;
    double lambda_;
};

class SubgradientExtragradientStepper : public Stepper {
  public:
    SubgradientExtragradientStepper(const VIProblem& problem, const Vector& v1,
                                    double lambda)
        : problem_(problem), xi_k_(v1), xi_km1_(v1), lambda_(lambda) {}

    void advance() override {
        Vector next = subgradient_extragradient_step(problem_, xi_k_, lambda_);
        xi_km1_ = std::move(xi_k_);
        xi_k_ = std::move(next);
    }

    const Vector& current() const override { return xi_k_; }
    const Vector& previous() const override { return xi_km1_; }
    double lambda() const override { return lambda_; }

    double tol(TolRule rule, double gamma) const override {
        if (rule == TolRule::SimpleResidual)
            return tol_simple_fresh(problem_, xi_k_, xi_km1_, gamma);
        return compute_natural_residual(problem_, xi_k_, 1.0);
    }

  private:
    const VIProblem& problem_;
    Vector xi_k_, xi_km1_;
    double lambda_;
};

class GoldenRatioStepper : public Stepper {
  public:
    GoldenRatioStepper(const VIProblem& problem, const SolverConfig& config,
                       const Vector& v0, const Vector& v1)
        : problem_(problem),
          state_(GoldenRatioState::init(problem, v0, v1, config.lambda0,
                                        config.phi, config.lambda_bar)) {}

    void advance() override { state_ = agraal_step(problem_, state_); }

    const Vector& current() const override { return state_.tau_k; }
    const Vector& previous() const override { return state_.tau_km1; }
    double lambda() const override { return state_.lambda_k; }

    double tol(TolRule rule, double gamma) const override {
        if (rule == TolRule::SimpleResidual)
            return compute_tol_simple(problem_, state_.tau_k, state_.tau_km1,
                                      state_.Atau_k, state_.Atau_km1, gamma);
        return (state_.tau_k -
                problem_.project(state_.tau_k - state_.Atau_k)).norm();
    }

  private:
    const VIProblem& problem_;
    GoldenRatioState state_;
};

inline std::unique_ptr<Stepper> make_stepper(const VIProblem& problem,
                                             const SolverConfig& config,
                                             const Vector& v0, const Vector& v1,
                                             double lipschitz) {
    switch (config.algorithm) {
    case Algorithm::Momentum:
        return std::make_unique<MomentumStepper>(problem, config, v0, v1);
    case Algorithm::SimpleProjection:
        return std::make_unique<SimpleProjStepper>(problem, config, v0, v1);
    case Algorithm::Extragradient:
        return std::make_unique<ExtragradientStepper>(problem, v1, 0.9 / lipschitz);
    case Algorithm::Popov:
        return std::make_unique<PopovStepper>(problem, v0, v1,
                                              0.9 / (3.0 * lipschitz));
    case Algorithm::SubgradientExtragradient:
        return std::make_unique<SubgradientExtragradientStepper>(problem, v1,
                                                                 0.9 / lipschitz);
    case Algorithm::AdaptiveGoldenRatio:
        return std::make_unique<GoldenRatioStepper>(problem, config, v0, v1);
    }
    throw ConfigError("unknown algorithm");
}

} // namespace viforge::detail
