#include "ruin/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

namespace ruin {

namespace {

int resolve_workers(int workers) {
    if (workers > 0) return workers;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(std::min(hw, 16u));
}

double bernoulli_std_error(double p, std::uint64_t n) {
    const double nn = static_cast<double>(n);
    if (p < 1e-5) {
        // One-sigma Wilson half-width; stays positive at p = 0.
        return std::sqrt(p * (1.0 - p) / nn + 1.0 / (4.0 * nn * nn)) / (1.0 + 1.0 / nn);
    }
    return std::sqrt(p * (1.0 - p) / nn);
}

struct WorkerTotals {
    std::uint64_t hits = 0;
    std::uint64_t joint_hits = 0;
    double accum = 0.0;
    double accum_sq = 0.0;
};

/// Runs fn over sample indices [0, n) on `workers` threads; per-worker totals
/// are reduced in worker order so the result does not depend on scheduling.
template <class PerSample>
std::vector<WorkerTotals> run_partitioned(std::uint64_t n, int workers, PerSample per_sample) {
    const auto worker_count = static_cast<std::uint64_t>(workers);
    std::vector<WorkerTotals> totals(workers);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    const std::uint64_t base = n / worker_count;
    const std::uint64_t extra = n % worker_count;
    std::uint64_t begin = 0;
    for (std::uint64_t w = 0; w < worker_count; ++w) {
        const std::uint64_t count = base + (w < extra ? 1 : 0);
        const std::uint64_t end = begin + count;
        threads.emplace_back([&per_sample, &totals, w, begin, end] {
            WorkerTotals local;
            for (std::uint64_t i = begin; i < end; ++i) per_sample(i, local);
            totals[w] = local;
        });
        begin = end;
    }
    for (auto& th : threads) th.join();
    return totals;
}

/// Computable stand-in for the infinite-horizon ruin probability, used only
/// for the horizon-residual diagnostic. Exact for exponential claims; for
/// Lomax the first-order tail approximation with a 2x safety factor.
double ruin_probability_proxy(const RiskModel& model, double capital) {
    if (capital <= 0.0) return model.rho();
    const double rho = model.rho();
    if (model.claims().family() == ClaimFamily::Exponential) {
        return rho * std::exp(-(model.claims().rate() - model.lambda()) * capital);
    }
    const double first_order =
        rho / (1.0 - rho) * model.claims().integrated_tail().tail(capital);
    return std::min(rho, 2.0 * first_order);
}

}  // namespace

MCEstimate bernoulli_monte_carlo(std::uint64_t n, std::uint64_t seed, int workers,
                                 const std::function<bool(RngStream&, std::uint64_t)>& fn) {
    if (n < 1) throw std::domain_error("sample count must be at least 1");
    workers = resolve_workers(workers);
    const auto totals = run_partitioned(n, workers, [&](std::uint64_t i, WorkerTotals& local) {
        RngStream rng(seed, i);
        if (fn(rng, i)) ++local.hits;
    });
    std::uint64_t hits = 0;
    for (const auto& t : totals) hits += t.hits;

    MCEstimate est;
    est.n = n;
    est.seed = seed;
    est.workers = workers;
    est.value = static_cast<double>(hits) / static_cast<double>(n);
    est.std_error = bernoulli_std_error(est.value, n);
    return est;
}

MCEstimate mean_monte_carlo(std::uint64_t n, std::uint64_t seed, int workers,
                            const std::function<double(RngStream&, std::uint64_t)>& fn) {
    if (n < 1) throw std::domain_error("sample count must be at least 1");
    workers = resolve_workers(workers);
    const auto totals = run_partitioned(n, workers, [&](std::uint64_t i, WorkerTotals& local) {
        RngStream rng(seed, i);
        const double v = fn(rng, i);
        local.accum += v;
        local.accum_sq += v * v;
    });
    double sum = 0.0;
    double sum_sq = 0.0;
    for (const auto& t : totals) {
        sum += t.accum;
        sum_sq += t.accum_sq;
    }
    const double nn = static_cast<double>(n);
    MCEstimate est;
    est.n = n;
    est.seed = seed;
    est.workers = workers;
    est.value = sum / nn;
    const double variance = std::max(0.0, sum_sq / nn - est.value * est.value);
    est.std_error = std::sqrt(variance / nn);
    return est;
}

MCEstimate estimate_finite_ruin_direct(const RiskModel& model, double u, double t,
                                       std::uint64_t n, std::uint64_t seed, int workers) {
    if (n < 1) throw std::domain_error("sample count must be at least 1");
    if (!(u >= 0.0) || !(t > 0.0)) throw std::domain_error("need u >= 0 and t > 0");
    workers = resolve_workers(workers);

    const auto totals = run_partitioned(n, workers, [&](std::uint64_t i, WorkerTotals& local) {
        RngStream rng(seed, i);
        double surplus = 0.0;
        double clock = 0.0;
        bool ruined = false;
        while (true) {
            const double gap = rng.next_exponential(model.lambda());
            if (clock + gap > t) {
                surplus -= t - clock;
                break;
            }
            clock += gap;
            surplus += model.claims().sample(rng) - gap;
            if (surplus > u) {
                ruined = true;
                break;
            }
        }
        if (ruined) {
            ++local.hits;
        } else {
            // Surviving path: ruin after the horizon happens with probability
            // psi(u - S_t) given the terminal surplus.
            local.accum += ruin_probability_proxy(model, u - surplus);
        }
    });

    std::uint64_t hits = 0;
    double residual = 0.0;
    for (const auto& w : totals) {
        hits += w.hits;
        residual += w.accum;
    }
    MCEstimate est;
    est.n = n;
    est.seed = seed;
    est.workers = workers;
    est.value = static_cast<double>(hits) / static_cast<double>(n);
    est.std_error = bernoulli_std_error(est.value, n);
    est.horizon_residual_bound = residual / static_cast<double>(n);
    return est;
}

RuinSplitEstimate estimate_ruin_split(const RiskModel& model, double u, double t,
                                      std::uint64_t n, std::uint64_t seed, int workers) {
    if (n < 1) throw std::domain_error("sample count must be at least 1");
    if (!(u >= 0.0) || !(t > 0.0)) throw std::domain_error("need u >= 0 and t > 0");
    workers = resolve_workers(workers);

    const auto totals = run_partitioned(n, workers, [&](std::uint64_t i, WorkerTotals& local) {
        RngStream rng(seed, i);
        const auto path = sample_ruin_ladder_walk(model, u, rng);
        if (!path) return;
        ++local.hits;
        const double deficit = path->total_deficit();
        const double passage =
            deficit > 0.0 ? sample_first_passage(model, deficit, rng).time : 0.0;
        if (passage <= t) ++local.joint_hits;
    });

    std::uint64_t ruined = 0;
    std::uint64_t in_time = 0;
    for (const auto& w : totals) {
        ruined += w.hits;
        in_time += w.joint_hits;
    }
    RuinSplitEstimate split;
    for (auto* est : {&split.infinite, &split.finite}) {
        est->n = n;
        est->seed = seed;
        est->workers = workers;
    }
    split.infinite.value = static_cast<double>(ruined) / static_cast<double>(n);
    split.infinite.std_error = bernoulli_std_error(split.infinite.value, n);
    split.finite.value = static_cast<double>(in_time) / static_cast<double>(n);
    split.finite.std_error = bernoulli_std_error(split.finite.value, n);
    return split;
}

MCEstimate estimate_finite_ruin_ladder(const RiskModel& model, double u, double t,
                                       std::uint64_t n, std::uint64_t seed, int workers) {
    return estimate_ruin_split(model, u, t, n, seed, workers).finite;
}

MCEstimate estimate_infinite_ruin(const RiskModel& model, double u, std::uint64_t n,
                                  std::uint64_t seed, int workers) {
    if (!(u >= 0.0)) throw std::domain_error("initial capital must be nonnegative");
    return bernoulli_monte_carlo(n, seed, workers, [&](RngStream& rng, std::uint64_t) {
        return sample_ruin_ladder_walk(model, u, rng).has_value();
    });
}

MCEstimate estimate_workload_tail(const RiskModel& model, double u, double t, std::uint64_t n,
                                  std::uint64_t seed, int workers) {
    if (!(u >= 0.0) || !(t > 0.0)) throw std::domain_error("need u >= 0 and t > 0");
    return bernoulli_monte_carlo(n, seed, workers, [&](RngStream& rng, std::uint64_t) {
        double workload = 0.0;
        double clock = 0.0;
        while (true) {
            const double gap = rng.next_exponential(model.lambda());
            if (clock + gap >= t) {
                workload = std::max(workload - (t - clock), 0.0);
                return workload > u;
            }
            clock += gap;
            workload = std::max(workload - gap, 0.0) + model.claims().sample(rng);
        }
    });
}

}  // namespace ruin
