#include "ruin/ladder.hpp"

#include <numeric>

#include "ruin/errors.hpp"

namespace ruin {

double RuinLadderPath::total_overshoot() const {
    return std::accumulate(overshoots.begin(), overshoots.end(), 0.0);
}

double RuinLadderPath::total_deficit() const {
    return std::accumulate(deficits.begin(), deficits.end(), 0.0);
}

LadderPair sample_ladder_pair(const ClaimModel& claims, RngStream& rng) {
    const double total = claims.sample_size_biased(rng);
    const double split = rng.next_uniform();
    return LadderPair{split * total, (1.0 - split) * total};
}

std::optional<RuinLadderPath> sample_ruin_ladder_walk(const RiskModel& model, double u,
                                                      RngStream& rng) {
    if (!(u >= 0.0)) throw std::domain_error("initial capital must be nonnegative");
    RuinLadderPath path;
    double climbed = 0.0;
    while (true) {
        if (rng.next_uniform() >= model.rho()) return std::nullopt;
        const LadderPair pair = sample_ladder_pair(model.claims(), rng);
        path.overshoots.push_back(pair.overshoot);
        path.deficits.push_back(pair.deficit);
        climbed += pair.overshoot;
        if (climbed > u) return path;
    }
}

FirstPassageSample sample_first_passage(const RiskModel& model, double z, RngStream& rng,
                                        std::uint64_t max_events) {
    if (!(z > 0.0)) throw std::domain_error("first passage level must be positive");
    FirstPassageSample sample;
    double level = 0.0;
    double time = 0.0;
    while (true) {
        const double gap = rng.next_exponential(model.lambda());
        if (level + gap >= z) {
            sample.time = time + (z - level);
            return sample;
        }
        time += gap;
        level += gap - model.claims().sample(rng);
        if (++sample.jumps > max_events)
            throw numeric_error("first passage exceeded the event cap");
    }
}

double sample_busy_period(const RiskModel& model, RngStream& rng, std::uint64_t max_events) {
    const double initial = model.claims().sample(rng);
    if (initial <= 0.0) return 0.0;
    return sample_first_passage(model, initial, rng, max_events).time;
}

}  // namespace ruin
