#pragma once

#include <complex>
#include <cstdint>
#include <limits>

#include "ruin/rng.hpp"

namespace ruin {

enum class ClaimFamily { Lomax, Exponential };

class IntegratedTail;

/// Claim-size distribution.
///
/// Two families are supported. Lomax (Pareto type II) is the canonical
/// regularly varying family: survival (1+x/theta)^-alpha with tail index
/// alpha > 2 so the second moment is finite, and everything downstream
/// (integrated tail, moments, quantiles) is closed form. Exponential claims
/// are carried along purely as a classical closed-form oracle; they are not
/// regularly varying and the asymptotic approximations reject them.
class ClaimModel {
public:
    static ClaimModel lomax(double alpha, double theta);
    static ClaimModel exponential(double rate);

    ClaimFamily family() const noexcept { return family_; }
    bool is_regularly_varying() const noexcept { return family_ == ClaimFamily::Lomax; }

    double mean() const noexcept { return mean_; }
    double second_moment() const noexcept { return second_moment_; }
    /// Tail index alpha; +infinity for the exponential family.
    double tail_index() const noexcept { return tail_index_; }

    double alpha() const noexcept { return alpha_; }
    double theta() const noexcept { return theta_; }
    double rate() const noexcept { return rate_; }

    /// Survival function P(X > x).
    double tail(double x) const;
    double cdf(double x) const { return 1.0 - tail(x); }
    double density(double x) const;
    /// Inverse CDF; quantile(0) = 0.
    double quantile(double p) const;

    /// Laplace transform E[exp(-sX)] for Re(s) >= 0. Closed form for the
    /// exponential family; adaptive quadrature for Lomax (absolute accuracy
    /// well inside 1e-10). The uniform bound |s F^(s)| < M near the origin
    /// holds for both families (|s F^(s)| <= |s|) and is not checked at
    /// runtime.
    std::complex<double> laplace(std::complex<double> s) const;
    /// d/ds of the Laplace transform at real s >= 0 (equals -E[X exp(-sX)]).
    double laplace_derivative(double s) const;

    /// Exact inverse-CDF draw.
    double sample(RngStream& rng) const { return quantile(rng.next_uniform()); }

    /// Draw from the size-biased law t f(t)/mu: acceptance-rejection with a
    /// Lomax(alpha-1, theta) envelope for Lomax claims (acceptance ratio
    /// t/(theta+t), envelope bound alpha); Gamma(2, rate) directly for
    /// exponential claims.
    double sample_size_biased(RngStream& rng) const;

    IntegratedTail integrated_tail() const;

private:
    ClaimModel() = default;

    ClaimFamily family_ = ClaimFamily::Lomax;
    double alpha_ = 0.0;
    double theta_ = 0.0;
    double rate_ = 0.0;
    double mean_ = 0.0;
    double second_moment_ = 0.0;
    double tail_index_ = std::numeric_limits<double>::infinity();
};

/// Integrated-tail distribution F0, with density tail(x)/mean. This is the
/// ladder-height law of the risk process. For Lomax claims the survival
/// function is again closed form: (1+x/theta)^-(alpha-1).
class IntegratedTail {
public:
    explicit IntegratedTail(const ClaimModel& parent) : parent_(parent) {}

    const ClaimModel& parent() const noexcept { return parent_; }

    double tail(double x) const;
    double cdf(double x) const { return 1.0 - tail(x); }
    double density(double x) const;
    double quantile(double p) const;
    double mean() const noexcept { return parent_.second_moment() / (2.0 * parent_.mean()); }

    double sample(RngStream& rng) const { return quantile(rng.next_uniform()); }

private:
    ClaimModel parent_;
};

}  // namespace ruin
