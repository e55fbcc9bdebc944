#include "ruin/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ruin/errors.hpp"

namespace ruin {

namespace {
constexpr double kFixedPointTol = 1e-12;
constexpr int kFixedPointCap = 10000;
constexpr double kRootTol = 1e-12;
constexpr int kRootCap = 200;
}  // namespace

std::complex<double> kappa(const RiskModel& model, std::complex<double> s) {
    if (s.real() < 0.0) throw std::domain_error("kappa needs Re(s) >= 0");
    if (s == std::complex<double>(0.0, 0.0)) return 0.0;
    return s + model.lambda() * (model.claims().laplace(s) - 1.0);
}

double kappa_inverse(const RiskModel& model, double s) {
    if (s < 0.0) throw std::domain_error("kappa_inverse needs s >= 0");
    if (s == 0.0) return 0.0;

    const auto value = [&](double r) { return kappa(model, r).real() - s; };

    double lo = 0.0;
    double hi = s + model.lambda();
    // kappa(r) >= (1-rho) r, so the root sits at or below s/(1-rho).
    double r = std::min(s / (1.0 - model.rho()), hi);
    double fr = value(r);
    for (int it = 0; it < kRootCap; ++it) {
        if (std::abs(fr) < kRootTol) return r;
        if (fr > 0.0)
            hi = r;
        else
            lo = r;
        const double slope = 1.0 + model.lambda() * model.claims().laplace_derivative(r);
        double next = r - fr / slope;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        r = next;
        fr = value(r);
    }
    throw numeric_error("kappa_inverse did not converge", std::abs(fr));
}

std::complex<double> busy_period_transform(const RiskModel& model, std::complex<double> s) {
    if (s.real() < 0.0) throw std::domain_error("busy period transform needs Re(s) >= 0");
    const ClaimModel& claims = model.claims();
    const double lambda = model.lambda();

    std::complex<double> g = claims.laplace(s);
    for (int it = 0; it < kFixedPointCap; ++it) {
        const std::complex<double> next = claims.laplace(s - lambda * (g - 1.0));
        const double delta = std::abs(next - g);
        g = next;
        if (delta < kFixedPointTol) return g;
    }
    throw numeric_error("busy period fixed point did not converge",
                        std::abs(g - claims.laplace(s - lambda * (g - 1.0))));
}

std::complex<double> centered_passage_cf(const RiskModel& model, double z, double s) {
    if (!(z > 0.0)) throw std::domain_error("centered passage cf needs z > 0");
    if (s == 0.0) return 1.0;
    const double t = s / std::sqrt(z);
    // chi_E(t) = E[exp(i t E)] is the busy-period transform at -i t.
    const std::complex<double> chi = busy_period_transform(model, std::complex<double>(0.0, -t));
    const std::complex<double> exponent =
        model.lambda() * z * (chi - 1.0) -
        std::complex<double>(0.0, std::sqrt(z) * model.lambda() * model.busy_period_mean() * s);
    return std::exp(exponent);
}

TailEstimate gil_pelaez_tail(const std::function<std::complex<double>(double)>& cf, double w,
                             const InversionConfig& cfg) {
    if (!(cfg.step > 0.0) || !(cfg.s_max > cfg.step))
        throw std::domain_error("inversion grid needs 0 < step < s_max");

    const auto points = static_cast<std::size_t>(cfg.s_max / cfg.step);
    const auto integrand = [&](double s) {
        return std::imag(std::exp(std::complex<double>(0.0, -w * s)) * cf(s)) / s;
    };

    // s -> 0 limit Im cf'(0) - w, with the derivative read off the first node.
    double sum = 0.5 * (std::imag(cf(cfg.step)) / cfg.step - w);
    for (std::size_t k = 1; k < points; ++k) sum += integrand(cfg.step * static_cast<double>(k));
    sum += 0.5 * integrand(cfg.step * static_cast<double>(points));

    const double raw = 0.5 + cfg.step * sum / std::numbers::pi;
    TailEstimate est;
    est.value = std::clamp(raw, 0.0, 1.0);
    est.clamped = raw != est.value;
    return est;
}

}  // namespace ruin
