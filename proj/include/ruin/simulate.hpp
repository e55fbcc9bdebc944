#pragma once

#include <cstdint>
#include <functional>

#include "ruin/ladder.hpp"
#include "ruin/risk.hpp"

namespace ruin {

/// Result of a Bernoulli Monte Carlo run.
///
/// `std_error` is the binomial normal-approximation standard error except for
/// values below 1e-5, where the half-width of a one-sigma Wilson interval is
/// reported instead (tiny tail frequencies make the plug-in formula collapse).
///
/// Reproducibility contract: every sample index owns a counter-based RNG
/// substream derived from (seed, index), and Bernoulli counts are integers,
/// so the estimate is bit-identical for a fixed (seed, n) regardless of the
/// worker count, and identical sample indices see identical draws across
/// scenario parameters (common random numbers).
struct MCEstimate {
    double value = 0.0;
    double std_error = 0.0;
    std::uint64_t n = 0;
    std::uint64_t seed = 0;
    int workers = 1;
    /// For finite horizons standing in for t = infinity: average upper bound
    /// on the probability that a surviving path still ruins after the
    /// horizon (exact for exponential claims, first-order with a safety
    /// factor for Lomax). Zero when not applicable.
    double horizon_residual_bound = 0.0;
};

/// Joint ladder-based estimate from a single run: the infinite-horizon ruin
/// frequency and the finite-time frequency {ruin and passage time <= t}.
struct RuinSplitEstimate {
    MCEstimate infinite;
    MCEstimate finite;
};

/// Generic parallel Bernoulli driver: fn(rng, sample_index) -> bool.
MCEstimate bernoulli_monte_carlo(std::uint64_t n, std::uint64_t seed, int workers,
                                 const std::function<bool(RngStream&, std::uint64_t)>& fn);

/// Parallel sample-mean driver for real-valued statistics:
/// fn(rng, sample_index) -> double. Returns the mean with its standard error.
MCEstimate mean_monte_carlo(std::uint64_t n, std::uint64_t seed, int workers,
                            const std::function<double(RngStream&, std::uint64_t)>& fn);

/// Direct path estimate of the finite-time ruin probability: simulate the
/// claim surplus event by event to the horizon and flag paths whose running
/// maximum exceeds u. Exact in distribution.
MCEstimate estimate_finite_ruin_direct(const RiskModel& model, double u, double t,
                                       std::uint64_t n, std::uint64_t seed, int workers);

/// Ladder-conditional estimate of the same quantity: run the geometric ladder
/// walk; on ruin, draw the first-passage time to the total deficit and test
/// it against the horizon. Unbiased, with variance at most the direct
/// estimator's.
MCEstimate estimate_finite_ruin_ladder(const RiskModel& model, double u, double t,
                                       std::uint64_t n, std::uint64_t seed, int workers);

/// Ladder walk and first-passage horizon test from one run: `infinite` is the
/// nonempty-walk frequency, `finite` the joint frequency. The convergence
/// tables need both from common samples.
RuinSplitEstimate estimate_ruin_split(const RiskModel& model, double u, double t,
                                      std::uint64_t n, std::uint64_t seed, int workers);

/// Infinite-horizon ruin probability: frequency of nonempty ladder walks.
/// No time horizon is involved.
MCEstimate estimate_infinite_ruin(const RiskModel& model, double u, std::uint64_t n,
                                  std::uint64_t seed, int workers);

/// Tail of the dual M/G/1 workload at time t, started empty: by duality this
/// equals the finite-time ruin probability.
MCEstimate estimate_workload_tail(const RiskModel& model, double u, double t, std::uint64_t n,
                                  std::uint64_t seed, int workers);

}  // namespace ruin
