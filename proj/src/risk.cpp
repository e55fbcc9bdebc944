#include "ruin/risk.hpp"

#include <stdexcept>

namespace ruin {

RiskModel::RiskModel(ClaimModel claims, double lambda) : claims_(claims), lambda_(lambda) {
    if (!(lambda > 0.0)) throw std::domain_error("arrival rate must be positive");
    rho_ = lambda_ * claims_.mean();
    if (!(rho_ < 1.0))
        throw std::domain_error("net profit condition violated: lambda * E[X] must be < 1");
}

}  // namespace ruin
