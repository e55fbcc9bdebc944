#pragma once

#include <complex>
#include <functional>

#include "ruin/risk.hpp"

namespace ruin {

/// Discretization of the Gil-Pelaez inversion integral: trapezoidal rule on a
/// uniform frequency grid with spacing `step`, truncated at `s_max`.
struct InversionConfig {
    double step = 1e-3;
    double s_max = 100.0;

    /// Default grid for recovering a tail at threshold w: finer frequency
    /// resolution is pointless below the oscillation scale 1/|w|.
    static InversionConfig for_threshold(double w) {
        InversionConfig cfg;
        cfg.step = 1e-3 * std::max(1.0, 1.0 / std::max(std::abs(w), 1e-3));
        cfg.s_max = 100.0;
        return cfg;
    }
};

/// Tail probability recovered by numerical inversion. Discretization can
/// overshoot [0, 1] by O(step^2); the value is clamped and flagged.
struct TailEstimate {
    double value = 0.0;
    bool clamped = false;
};

/// Laplace exponent of the net payout process: kappa(s) = s + lambda(F^(s)-1),
/// so that E[exp(-s S_t)] = exp(t kappa(s)). Requires Re(s) >= 0; kappa(0) = 0
/// exactly.
std::complex<double> kappa(const RiskModel& model, std::complex<double> s);

/// Unique nonnegative root r of kappa(r) = s for real s >= 0 (kappa is
/// increasing on the nonnegative axis under the net profit condition).
/// Safeguarded Newton with the bracket [0, s + lambda]; converges to
/// |kappa(r) - s| < 1e-12 or throws numeric_error with the residual.
double kappa_inverse(const RiskModel& model, double s);

/// Laplace transform of the dual M/G/1 busy period, computed as the fixed
/// point g = F^(s - lambda (g - 1)) by direct iteration from g = F^(s).
/// The map is a contraction with factor rho for Re(s) >= 0. Iterates stop
/// when successive values differ by < 1e-12; exceeding the iteration cap
/// throws numeric_error.
std::complex<double> busy_period_transform(const RiskModel& model, std::complex<double> s);

/// Characteristic function of U(z) = (w(z) - z/(1-rho)) / sqrt(z), the
/// centered and scaled first-passage time to level z:
///   exp(lambda z (chi_E(s/sqrt(z)) - 1) - i sqrt(z) lambda E[E] s)
/// where chi_E is the busy-period characteristic function (the Laplace fixed
/// point evaluated on the imaginary axis). Converges to N(0, lambda E[E^2])
/// as z grows.
std::complex<double> centered_passage_cf(const RiskModel& model, double z, double s);

/// Gil-Pelaez inversion of a characteristic function:
///   P(X > w) = 1/2 + (1/pi) Int_0^s_max Im(exp(-i w s) cf(s)) / s ds,
/// trapezoidal on the cfg grid, with the s -> 0 limit of the integrand
/// (Im cf'(0) - w) substituted at the origin.
TailEstimate gil_pelaez_tail(const std::function<std::complex<double>(double)>& cf, double w,
                             const InversionConfig& cfg);

}  // namespace ruin
