#pragma once

#include <cstdint>
#include <optional>

#include "ruin/risk.hpp"
#include "ruin/simulate.hpp"

namespace ruin {

/// Source of the infinite-horizon ruin probability plugged into the
/// second-order expansion: a Monte Carlo estimate, or its own first-order
/// tail approximation (the difference is absorbed by the expansion error).
enum class PsiPlugin { Mc, Asymptotic };

/// Convention for the second-order constant multiplying the claim tail.
/// `Full` uses 3 E[X^2]/mu. `Half` uses 3 E[X^2]/(2 mu), the value implied by
/// the ladder-height mean E[Y] = E[X^2]/(2 mu). The convergence tables
/// evaluate both and report which tracks simulation.
enum class ConstantMode { Full, Half };

/// Limit law of the scaled integrated-tail overshoot, with survival
/// (1 + y)^-(alpha - 1).
struct WLimit {
    double alpha;
};

double w_limit_tail(const WLimit& limit, double y);

/// The three-term second-order expansion of the late-ruin probability
/// P(x u < ruin time < infinity). Its complement against the plugged-in
/// psi(u) approximates the finite-time ruin probability; see
/// finite_time_value().
struct ApproxBreakdown {
    double term1 = 0.0;  ///< rho Fbar0(u + x(1-rho)u) / (1-rho)
    double term2 = 0.0;  ///< second-order claim-tail correction (mode-dependent constant)
    double term3 = 0.0;  ///< passage-time fluctuation correction, with its minus sign
    double total = 0.0;  ///< term1 + term2 + term3
    double psi_u_used = 0.0;  ///< the psi(u) value that entered term3
    PsiPlugin psi_u_mode = PsiPlugin::Asymptotic;
    ConstantMode constant_mode = ConstantMode::Full;
    double u = 0.0;
    double x = 0.0;

    /// Second-order approximation of the finite-time ruin probability
    /// P(ruin before x u): psi(u) minus the late-ruin expansion.
    double finite_time_value() const { return psi_u_used - total; }
};

/// First-order finite-time approximation:
/// rho/(1-rho) Fbar0(u) P(W/(1-rho) <= x), with the time horizon x u.
/// Rejects claim families that are not regularly varying.
double first_order_psi(const RiskModel& model, double u, double x);

/// Second-order expansion; psi_u must be supplied when mode is PsiPlugin::Mc.
ApproxBreakdown second_order_psi(const RiskModel& model, double u, double x,
                                 PsiPlugin psi_u_mode, ConstantMode constant_mode,
                                 const std::optional<MCEstimate>& psi_u = std::nullopt);

/// First-order infinite-horizon tail: rho Fbar0(u) / (1-rho). Exceeds the
/// true probability at small u (it is an asymptotic, not a bound).
double infinite_ruin_asymptotic(const RiskModel& model, double u);

/// Two-term tail expansion of an n-fold claim sum:
/// n Fbar(u) + n(n-1) mu f(u).
double compound_sum_second_order(const ClaimModel& claims, std::uint64_t n, double u);

/// Equivalent shifted-argument form n Fbar(u - (n-1) mu); requires
/// u > (n-1) mu.
double compound_sum_shifted(const ClaimModel& claims, std::uint64_t n, double u);

/// Second-order tail of the joint ladder event {S_n > u, S_{n-1} <= u,
/// deficit sum > x u}: Fbar0(u + x u) plus the mode-dependent claim-tail
/// correction.
double ladder_sum_second_order(const RiskModel& model, std::uint64_t n, double u, double x,
                               ConstantMode constant_mode = ConstantMode::Full);

}  // namespace ruin
