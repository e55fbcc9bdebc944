#include "ruin/asymptotics.hpp"

#include <cmath>
#include <stdexcept>

namespace ruin {

namespace {

void require_regularly_varying(const ClaimModel& claims) {
    if (!claims.is_regularly_varying())
        throw std::domain_error(
            "asymptotic approximations need a regularly varying claim family (lomax)");
}

double second_order_constant(const ClaimModel& claims, ConstantMode mode) {
    const double full = 3.0 * claims.second_moment() / claims.mean();
    return mode == ConstantMode::Full ? full : 0.5 * full;
}

}  // namespace

double w_limit_tail(const WLimit& limit, double y) {
    if (!(limit.alpha > 2.0)) throw std::domain_error("limit law needs alpha > 2");
    if (y < 0.0) throw std::domain_error("limit tail argument must be nonnegative");
    return std::pow(1.0 + y, -(limit.alpha - 1.0));
}

double first_order_psi(const RiskModel& model, double u, double x) {
    require_regularly_varying(model.claims());
    if (!(u > 0.0) || !(x > 0.0)) throw std::domain_error("need u > 0 and x > 0");
    const double rho = model.rho();
    const double alpha = model.claims().tail_index();
    const double scaled = x * (1.0 - rho);
    const double w_cdf = 1.0 - std::pow(1.0 + scaled, -(alpha - 1.0));
    return rho / (1.0 - rho) * model.claims().integrated_tail().tail(u) * w_cdf;
}

ApproxBreakdown second_order_psi(const RiskModel& model, double u, double x,
                                 PsiPlugin psi_u_mode, ConstantMode constant_mode,
                                 const std::optional<MCEstimate>& psi_u) {
    require_regularly_varying(model.claims());
    if (!(u > 0.0) || !(x > 0.0)) throw std::domain_error("need u > 0 and x > 0");
    if (psi_u_mode == PsiPlugin::Mc && !psi_u)
        throw std::invalid_argument("Mc plug-in requested but no psi(u) estimate supplied");

    const ClaimModel& claims = model.claims();
    const double rho = model.rho();
    const double one_minus_rho = 1.0 - rho;
    const double alpha = claims.tail_index();
    const double scaled = x * one_minus_rho;
    const double shifted = u + scaled * u;

    ApproxBreakdown out;
    out.u = u;
    out.x = x;
    out.psi_u_mode = psi_u_mode;
    out.constant_mode = constant_mode;
    out.psi_u_used =
        psi_u_mode == PsiPlugin::Mc ? psi_u->value : infinite_ruin_asymptotic(model, u);

    out.term1 = rho * claims.integrated_tail().tail(shifted) / one_minus_rho;
    out.term2 = second_order_constant(claims, constant_mode) * rho * rho * claims.tail(shifted) /
                (one_minus_rho * one_minus_rho);

    const double bracket =
        (alpha - 1.0) / std::pow(1.0 + scaled, alpha) -
        alpha * (alpha - 1.0) * scaled / std::pow(1.0 + scaled, alpha + 1.0);
    out.term3 = -out.psi_u_used * model.lambda() * claims.second_moment() /
                    (2.0 * u * one_minus_rho) * bracket +
                0.0;  // +0.0 folds a negative zero from an exact bracket root

    out.total = out.term1 + out.term2 + out.term3;
    return out;
}

double infinite_ruin_asymptotic(const RiskModel& model, double u) {
    require_regularly_varying(model.claims());
    if (!(u >= 0.0)) throw std::domain_error("initial capital must be nonnegative");
    return model.rho() / (1.0 - model.rho()) * model.claims().integrated_tail().tail(u);
}

double compound_sum_second_order(const ClaimModel& claims, std::uint64_t n, double u) {
    require_regularly_varying(claims);
    if (n < 1) throw std::domain_error("need at least one summand");
    if (!(u > 0.0)) throw std::domain_error("threshold must be positive");
    const double nn = static_cast<double>(n);
    return nn * claims.tail(u) + nn * (nn - 1.0) * claims.mean() * claims.density(u);
}

double compound_sum_shifted(const ClaimModel& claims, std::uint64_t n, double u) {
    require_regularly_varying(claims);
    if (n < 1) throw std::domain_error("need at least one summand");
    const double shift = (static_cast<double>(n) - 1.0) * claims.mean();
    if (!(u > shift)) throw std::domain_error("threshold must exceed (n-1) E[X]");
    return static_cast<double>(n) * claims.tail(u - shift);
}

double ladder_sum_second_order(const RiskModel& model, std::uint64_t n, double u, double x,
                               ConstantMode constant_mode) {
    require_regularly_varying(model.claims());
    if (n < 1) throw std::domain_error("need at least one ladder step");
    if (!(u > 0.0) || !(x > 0.0)) throw std::domain_error("need u > 0 and x > 0");
    const ClaimModel& claims = model.claims();
    const double shifted = u + x * u;
    const double correction =
        second_order_constant(claims, constant_mode) * (static_cast<double>(n) - 1.0);
    return claims.integrated_tail().tail(shifted) + correction * claims.tail(shifted);
}

}  // namespace ruin
