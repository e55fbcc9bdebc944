#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace ruin {

/// Thrown when an iterative numerical procedure fails to converge.
/// Carries the last residual so callers can report how far off it was.
class numeric_error : public std::runtime_error {
public:
    explicit numeric_error(const std::string& what,
                           double residual = std::numeric_limits<double>::quiet_NaN())
        : std::runtime_error(what), residual_(residual) {}

    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

/// Thrown when an experiment configuration fails to parse or validate.
/// The message includes the offending line number where applicable.
class config_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace ruin
