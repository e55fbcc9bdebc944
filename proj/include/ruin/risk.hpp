#pragma once

#include "ruin/claims.hpp"

namespace ruin {

/// Compound Poisson risk model with unit premium rate: claims arrive at rate
/// lambda and the claim surplus drifts down at rate one between arrivals.
/// Construction enforces the net profit condition rho = lambda * mean < 1.
class RiskModel {
public:
    RiskModel(ClaimModel claims, double lambda);

    const ClaimModel& claims() const noexcept { return claims_; }
    double lambda() const noexcept { return lambda_; }
    static constexpr double premium_rate() noexcept { return 1.0; }

    double rho() const noexcept { return rho_; }

    /// Mean of the dual M/G/1 busy period: E[X] / (1 - rho).
    double busy_period_mean() const noexcept { return claims_.mean() / (1.0 - rho_); }
    /// Second moment of the busy period: E[X^2] / (1 - rho)^3.
    double busy_period_second_moment() const noexcept {
        const double one_minus_rho = 1.0 - rho_;
        return claims_.second_moment() / (one_minus_rho * one_minus_rho * one_minus_rho);
    }

private:
    ClaimModel claims_;
    double lambda_;
    double rho_;
};

}  // namespace ruin
