#include <doctest.h>

#include <cmath>
#include <vector>

#include "ruin/errors.hpp"
#include "ruin/ladder.hpp"
#include "test_support.hpp"

using namespace ruin;

namespace {
const RiskModel kLomaxModel(ClaimModel::lomax(3.0, 2.0), 0.5);
const RiskModel kExpModel(ClaimModel::exponential(1.0), 0.5);

double fourth_moment_se(const testsup::SampleStats& s, const std::vector<double>& xs) {
    double m4 = 0.0;
    for (double x : xs) {
        const double d = x - s.mean;
        m4 += d * d * d * d;
    }
    m4 /= static_cast<double>(xs.size());
    return std::sqrt((m4 - s.variance * s.variance) / static_cast<double>(xs.size()));
}
}  // namespace

TEST_CASE("ladder pair marginals and joint survival") {
    RngStream rng(71, 0);
    const std::size_t n = 1000000;
    std::vector<double> ys(n);
    std::vector<double> zs(n);
    std::size_t joint = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const LadderPair p = sample_ladder_pair(kLomaxModel.claims(), rng);
        ys[i] = p.overshoot;
        zs[i] = p.deficit;
        if (p.overshoot > 1.0 && p.deficit > 1.0) ++joint;
    }

    // E[Y] = integral of the integrated-tail survival = 2 for Lomax(3,2).
    const auto stats = testsup::summarize(ys);
    CHECK(std::abs(stats.mean - 2.0) < 3.0 * stats.mean_std_error());

    // P(Y>1, Z>1) = Fbar0(2) = 0.25.
    const double joint_freq = static_cast<double>(joint) / static_cast<double>(n);
    const double se = std::sqrt(0.25 * 0.75 / static_cast<double>(n));
    CHECK(std::abs(joint_freq - 0.25) < 3.0 * se);

    // Construction is exchangeable: Y and Z indistinguishable (two-sample KS).
    std::vector<double> y_head(ys.begin(), ys.begin() + 100000);
    std::vector<double> z_head(zs.begin(), zs.begin() + 100000);
    CHECK(testsup::ks_two_sample(y_head, z_head) <
          testsup::ks_two_sample_critical_1pct(y_head.size(), z_head.size()));

    // Marginal law is the integrated tail (one-sample KS).
    const auto f0 = kLomaxModel.claims().integrated_tail();
    CHECK(testsup::ks_statistic(y_head, [&](double v) { return f0.cdf(v); }) <
          testsup::ks_critical_1pct(y_head.size()));
}

TEST_CASE("ruin ladder walk hits with probability psi(u)") {
    // u = 0: one ladder epoch suffices, so the hit frequency is rho.
    {
        std::size_t hits = 0;
        const std::size_t n = 1000000;
        for (std::size_t i = 0; i < n; ++i) {
            RngStream rng(83, i);
            if (sample_ruin_ladder_walk(kLomaxModel, 0.0, rng)) ++hits;
        }
        const double freq = static_cast<double>(hits) / static_cast<double>(n);
        CHECK(std::abs(freq - 0.5) < 3.0 * std::sqrt(0.25 / static_cast<double>(n)));
    }

    // Exponential claims: psi(u) = rho exp(-(1-rho) u / mu) exactly.
    {
        std::size_t hits = 0;
        const std::size_t n = 1000000;
        for (std::size_t i = 0; i < n; ++i) {
            RngStream rng(97, i);
            if (sample_ruin_ladder_walk(kExpModel, 2.0, rng)) ++hits;
        }
        const double freq = static_cast<double>(hits) / static_cast<double>(n);
        const double psi = 0.5 * std::exp(-1.0);
        CHECK(std::abs(freq - psi) <
              3.0 * std::sqrt(psi * (1.0 - psi) / static_cast<double>(n)));
    }

    RngStream rng(1, 1);
    CHECK_THROWS_AS(sample_ruin_ladder_walk(kLomaxModel, -1.0, rng), std::domain_error);
}

TEST_CASE("ruin ladder path bookkeeping") {
    RngStream rng(11, 5);
    for (int i = 0; i < 2000; ++i) {
        const auto path = sample_ruin_ladder_walk(kLomaxModel, 3.0, rng);
        if (!path) continue;
        CHECK(path->steps() > 0);
        CHECK(path->overshoots.size() == path->deficits.size());
        CHECK(path->total_overshoot() > 3.0);
        const double before_last = path->total_overshoot() - path->overshoots.back();
        CHECK(before_last <= 3.0);
    }
}

TEST_CASE("first passage drift bound and pure-drift limit") {
    RngStream rng(13, 2);
    for (int i = 0; i < 5000; ++i) {
        const auto s = sample_first_passage(kLomaxModel, 2.5, rng);
        CHECK(s.time >= 2.5);
    }

    // With a vanishing arrival rate, the passage is the straight drift line.
    const RiskModel quiet(ClaimModel::lomax(3.0, 2.0), 1e-9);
    RngStream rng2(17, 0);
    for (int i = 0; i < 1000; ++i) {
        CHECK(std::abs(sample_first_passage(quiet, 4.0, rng2).time - 4.0) < 1e-6);
    }

    RngStream rng3(1, 1);
    CHECK_THROWS_AS(sample_first_passage(kLomaxModel, 0.0, rng3), std::domain_error);
}

TEST_CASE("first passage mean and variance") {
    RngStream rng(19, 4);
    const std::size_t n = 1000000;
    std::vector<double> times(n);
    for (auto& t : times) t = sample_first_passage(kLomaxModel, 1.0, rng).time;
    const auto stats = testsup::summarize(times);

    // E[w(z)] = z/(1-rho).
    CHECK(std::abs(stats.mean - 2.0) < 3.0 * stats.mean_std_error());

    // Var[w(z)] = lambda z E[E^2] = 16.
    CHECK(std::abs(stats.variance - 16.0) < 3.0 * fourth_moment_se(stats, times));
}

TEST_CASE("first passage additivity in distribution") {
    // w(2) should match w(1) + w'(1) in mean and variance.
    const std::size_t n = 400000;
    std::vector<double> direct(n);
    std::vector<double> summed(n);
    for (std::size_t i = 0; i < n; ++i) {
        RngStream ra(23, i);
        RngStream rb(29, i);
        RngStream rc(31, i);
        direct[i] = sample_first_passage(kLomaxModel, 2.0, ra).time;
        summed[i] = sample_first_passage(kLomaxModel, 1.0, rb).time +
                    sample_first_passage(kLomaxModel, 1.0, rc).time;
    }
    const auto a = testsup::summarize(direct);
    const auto b = testsup::summarize(summed);
    const double mean_se = std::sqrt(a.variance / n + b.variance / n);
    CHECK(std::abs(a.mean - b.mean) < 3.0 * mean_se);

    const double vse = std::hypot(fourth_moment_se(a, direct), fourth_moment_se(b, summed));
    CHECK(std::abs(a.variance - b.variance) < 3.0 * vse);
}

TEST_CASE("busy period moments and quiet limit") {
    RngStream rng(37, 8);
    const std::size_t n = 1000000;
    std::vector<double> periods(n);
    for (auto& e : periods) e = sample_busy_period(kLomaxModel, rng);
    const auto stats = testsup::summarize(periods);
    CHECK(std::abs(stats.mean - kLomaxModel.busy_period_mean()) <
          3.0 * stats.mean_std_error());

    std::vector<double> squares(n);
    for (std::size_t i = 0; i < n; ++i) squares[i] = periods[i] * periods[i];
    const auto sq = testsup::summarize(squares);
    CHECK(std::abs(sq.mean - kLomaxModel.busy_period_second_moment()) <
          3.0 * sq.mean_std_error());

    // lambda -> 0: the busy period collapses to the initiating claim. Replay
    // the same stream to recover that claim.
    const RiskModel quiet(ClaimModel::lomax(3.0, 2.0), 1e-9);
    for (std::uint64_t i = 0; i < 1000; ++i) {
        RngStream probe(41, i);
        const double claim = quiet.claims().sample(probe);
        RngStream replay(41, i);
        const double period = sample_busy_period(quiet, replay);
        CHECK(std::abs(period - claim) < 1e-6);
    }
}

TEST_CASE("scaled first passage is asymptotically normal") {
    // U(z) = (w(z) - z/(1-rho))/sqrt(z) -> N(0, lambda E[E^2]) = N(0, 16).
    // The busy period has an infinite third moment (tail index 3), so the
    // tail gap decays like log(z)/sqrt(z): measured -0.059 at z=200, -0.034
    // at z=800, -0.021 at z=3200. The checkable statement at desk scale is
    // the monotone approach.
    const double target = testsup::normal_tail(0.25);
    double prev_gap = std::numeric_limits<double>::infinity();
    struct Point {
        double z;
        std::size_t n;
    };
    for (Point p : {Point{200.0, 200000}, Point{800.0, 100000}, Point{3200.0, 50000}}) {
        std::size_t above = 0;
        for (std::size_t i = 0; i < p.n; ++i) {
            RngStream rng(43, i);
            const double w = sample_first_passage(kLomaxModel, p.z, rng).time;
            if ((w - p.z / (1.0 - kLomaxModel.rho())) / std::sqrt(p.z) > 1.0) ++above;
        }
        const double freq = static_cast<double>(above) / static_cast<double>(p.n);
        const double gap = std::abs(freq - target);
        CHECK(gap < prev_gap);
        prev_gap = gap;
    }
    CHECK(prev_gap < 0.03);
}
