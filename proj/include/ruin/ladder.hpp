#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ruin/risk.hpp"
#include "ruin/rng.hpp"

namespace ruin {

/// Default cap turning almost-surely-finite event loops into checkable
/// failures.
inline constexpr std::uint64_t kDefaultEventCap = 100000000;

/// One ladder step of the claim surplus: the overshoot above the previous
/// record and the deficit just before the record. Jointly,
/// P(overshoot > y, deficit > z) equals the integrated-tail survival at y+z;
/// each marginal is the integrated-tail law.
struct LadderPair {
    double overshoot = 0.0;
    double deficit = 0.0;
};

/// Ladder walk stopped at ruin: overshoots sum past the initial capital at
/// the final step and not before.
struct RuinLadderPath {
    std::vector<double> overshoots;
    std::vector<double> deficits;

    std::size_t steps() const noexcept { return overshoots.size(); }
    double total_overshoot() const;
    double total_deficit() const;
};

/// First-passage time of the dual process (unit upward drift, downward claim
/// jumps at rate lambda) to a level z, plus the number of arrivals consumed.
struct FirstPassageSample {
    double time = 0.0;
    std::uint64_t jumps = 0;
};

/// Draw one ladder pair. The joint density factorizes as f(y+z)/mu, so the
/// sum is size-biased and the split is uniform: T ~ t f(t)/mu, Y = U T,
/// Z = (1-U) T.
LadderPair sample_ladder_pair(const ClaimModel& claims, RngStream& rng);

/// Run the geometric ladder walk from capital u: each step continues with
/// probability rho and appends a fresh pair; a geometric failure before the
/// cumulative overshoot exceeds u means no ruin (empty result). The result is
/// nonempty with probability equal to the infinite-horizon ruin probability.
std::optional<RuinLadderPath> sample_ruin_ladder_walk(const RiskModel& model, double u,
                                                      RngStream& rng);

/// Exact first-passage simulation: track the current level and time, draw the
/// next arrival gap, finish on the drift segment that reaches z, otherwise
/// jump down by a claim and continue. No discretization.
FirstPassageSample sample_first_passage(const RiskModel& model, double z, RngStream& rng,
                                        std::uint64_t max_events = kDefaultEventCap);

/// Busy period of the dual M/G/1 queue, simulated as the first passage to a
/// fresh claim level. (The recursive identity E = X + sum of N(X) independent
/// busy periods would branch unboundedly under heavy tails; the first-passage
/// route is flat and exact in distribution.)
double sample_busy_period(const RiskModel& model, RngStream& rng,
                          std::uint64_t max_events = kDefaultEventCap);

}  // namespace ruin
