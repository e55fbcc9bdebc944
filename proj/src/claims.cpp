#include "ruin/claims.hpp"

#include <cmath>
#include <stdexcept>

#include "ruin/quadrature.hpp"

namespace ruin {

namespace {

// Truncation level so that the analytic remainder of a transform integral is
// below this bound; quadrature tolerances sit well below the 1e-10 contract.
constexpr double kTailBound = 1e-13;
constexpr double kQuadTol = 1e-12;

void require_nonneg(double x, const char* what) {
    if (!(x >= 0.0)) throw std::domain_error(std::string(what) + " must be nonnegative");
}

}  // namespace

ClaimModel ClaimModel::lomax(double alpha, double theta) {
    if (!(alpha > 2.0)) throw std::domain_error("lomax tail index must exceed 2");
    if (!(theta > 0.0)) throw std::domain_error("lomax scale must be positive");
    ClaimModel m;
    m.family_ = ClaimFamily::Lomax;
    m.alpha_ = alpha;
    m.theta_ = theta;
    m.mean_ = theta / (alpha - 1.0);
    m.second_moment_ = 2.0 * theta * theta / ((alpha - 1.0) * (alpha - 2.0));
    m.tail_index_ = alpha;
    return m;
}

ClaimModel ClaimModel::exponential(double rate) {
    if (!(rate > 0.0)) throw std::domain_error("exponential rate must be positive");
    ClaimModel m;
    m.family_ = ClaimFamily::Exponential;
    m.rate_ = rate;
    m.mean_ = 1.0 / rate;
    m.second_moment_ = 2.0 / (rate * rate);
    m.tail_index_ = std::numeric_limits<double>::infinity();
    return m;
}

double ClaimModel::tail(double x) const {
    require_nonneg(x, "claim size");
    if (family_ == ClaimFamily::Lomax) return std::pow(1.0 + x / theta_, -alpha_);
    return std::exp(-rate_ * x);
}

double ClaimModel::density(double x) const {
    require_nonneg(x, "claim size");
    if (family_ == ClaimFamily::Lomax)
        return (alpha_ / theta_) * std::pow(1.0 + x / theta_, -(alpha_ + 1.0));
    return rate_ * std::exp(-rate_ * x);
}

double ClaimModel::quantile(double p) const {
    if (!(p >= 0.0 && p < 1.0)) throw std::domain_error("quantile needs p in [0, 1)");
    if (family_ == ClaimFamily::Lomax) return theta_ * (std::pow(1.0 - p, -1.0 / alpha_) - 1.0);
    return -std::log(1.0 - p) / rate_;
}

std::complex<double> ClaimModel::laplace(std::complex<double> s) const {
    if (s.real() < 0.0) throw std::domain_error("laplace transform needs Re(s) >= 0");
    if (family_ == ClaimFamily::Exponential) return rate_ / (rate_ + s);
    if (s == std::complex<double>(0.0, 0.0)) return 1.0;

    // Truncate where either the survival mass or the exponential damping
    // already puts the remainder below kTailBound.
    double upper = theta_ * (std::pow(kTailBound, -1.0 / alpha_) - 1.0);
    if (s.real() > 0.0) upper = std::min(upper, -std::log(kTailBound) / s.real());

    const double freq = std::abs(s.imag());
    const double max_width = freq > 0.0 ? 6.0 / freq : std::numeric_limits<double>::infinity();
    const auto pts = geometric_breakpoints(upper, 0.5 * theta_, max_width);

    const auto integrand = [&](double x) { return std::exp(-s * x) * density(x); };
    return integrate_adaptive(integrand, pts, kQuadTol).value;
}

double ClaimModel::laplace_derivative(double s) const {
    if (s < 0.0) throw std::domain_error("laplace transform needs Re(s) >= 0");
    if (family_ == ClaimFamily::Exponential) {
        const double denom = rate_ + s;
        return -rate_ / (denom * denom);
    }
    // Integrand x f(x) decays one power slower than f, so push the cutoff out.
    double upper = theta_ * std::pow(1e12, 1.0 / (alpha_ - 1.0));
    if (s > 0.0) upper = std::min(upper, 40.0 / s);

    const auto integrand = [&](double x) {
        return std::complex<double>(x * std::exp(-s * x) * density(x), 0.0);
    };
    const auto pts = geometric_breakpoints(upper, 0.5 * theta_,
                                           std::numeric_limits<double>::infinity());
    return -integrate_adaptive(integrand, pts, kQuadTol).value.real();
}

double ClaimModel::sample_size_biased(RngStream& rng) const {
    if (family_ == ClaimFamily::Exponential) {
        // Gamma(2, rate): sum of two exponentials.
        return -(std::log(1.0 - rng.next_uniform()) + std::log(1.0 - rng.next_uniform())) / rate_;
    }
    while (true) {
        const double t = theta_ * (std::pow(1.0 - rng.next_uniform(), -1.0 / (alpha_ - 1.0)) - 1.0);
        if (rng.next_uniform() < t / (theta_ + t)) return t;
    }
}

IntegratedTail ClaimModel::integrated_tail() const { return IntegratedTail(*this); }

double IntegratedTail::tail(double x) const {
    require_nonneg(x, "ladder height");
    if (parent_.family() == ClaimFamily::Lomax)
        return std::pow(1.0 + x / parent_.theta(), -(parent_.alpha() - 1.0));
    return std::exp(-parent_.rate() * x);
}

double IntegratedTail::density(double x) const { return parent_.tail(x) / parent_.mean(); }

double IntegratedTail::quantile(double p) const {
    if (!(p >= 0.0 && p < 1.0)) throw std::domain_error("quantile needs p in [0, 1)");
    if (parent_.family() == ClaimFamily::Lomax)
        return parent_.theta() * (std::pow(1.0 - p, -1.0 / (parent_.alpha() - 1.0)) - 1.0);
    return -std::log(1.0 - p) / parent_.rate();
}

}  // namespace ruin
