#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ruin/asymptotics.hpp"
#include "ruin/risk.hpp"
#include "ruin/transforms.hpp"

namespace ruin {

/// Experiment description parsed from a flat key=value file ('#' comments,
/// one key per line). All randomness flows from the single root seed; a
/// missing seed is a hard error rather than a timestamp default.
struct ExperimentConfig {
    ClaimFamily family = ClaimFamily::Lomax;
    double alpha = 0.0;
    double theta = 0.0;
    double rate = 0.0;
    double lambda = 0.0;

    std::vector<double> u_list;
    std::vector<double> x_list;
    std::vector<double> t_list;

    std::uint64_t n = 100000;
    std::uint64_t seed = 0;
    int workers = 0;  // 0 = one per hardware thread (capped)

    InversionConfig inversion;

    PsiPlugin psi_u_mode = PsiPlugin::Mc;
    ConstantMode constant_mode = ConstantMode::Full;

    /// Parse and validate; throws config_error with the offending line number.
    static ExperimentConfig parse(std::istream& in);
    static ExperimentConfig load_file(const std::string& path);

    RiskModel make_model() const;
};

/// Table of the approximation terms, one row per (u, x):
/// u,x,first_order,term1,term2,term3,second_order_total,fbar_u,fbar0_u.
/// Numeric fields carry 17 significant digits. Returns a process exit code.
int run_approx(const ExperimentConfig& cfg, std::ostream& csv, std::ostream& log);

/// Convergence table pitting the ladder Monte Carlo estimate against the
/// first- and second-order approximations, one row per (u, x) with the
/// horizon t = x u. ratio1 and ratio2 are the respective errors divided by
/// the claim tail at u; the second-order column is reported under both
/// constant conventions. Per-row Monte Carlo failures land in the trailing
/// error column (commas escaped with pipes) and the run continues.
int run_convergence(const ExperimentConfig& cfg, std::ostream& csv, std::ostream& log);

/// Cross-module invariant suite; prints one line per check with the measured
/// and tolerated deviation. Returns 0 when everything passes, 3 otherwise.
int run_selftest(const ExperimentConfig& cfg, std::ostream& out, std::ostream& log);

}  // namespace ruin
