// ruinlab: experiment runner for the ruin library.
//
//   ruinlab <approx|convergence|selftest> --config <path> [--out <path>]
//
// Exit codes: 0 success, 1 configuration error, 2 numeric failure,
// 3 selftest failure.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ruin/errors.hpp"
#include "ruin/experiment.hpp"

namespace {

int dispatch(const std::string& mode, const std::string& config_path,
             const std::string& out_path) {
    const ruin::ExperimentConfig cfg = ruin::ExperimentConfig::load_file(config_path);

    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) {
            std::cerr << "ruinlab: cannot open output file '" << out_path << "'\n";
            return 1;
        }
    }
    std::ostream& out = out_path.empty() ? std::cout : file;

    if (mode == "approx") return ruin::run_approx(cfg, out, std::cerr);
    if (mode == "convergence") return ruin::run_convergence(cfg, out, std::cerr);
    return ruin::run_selftest(cfg, out, std::cerr);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite-time ruin probabilities: simulation and asymptotics"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;
    std::string chosen;
    for (const char* name : {"approx", "convergence", "selftest"}) {
        auto* sub = app.add_subcommand(name);
        sub->add_option("--config", config_path, "experiment config file")->required();
        sub->add_option("--out", out_path, "output file (stdout when absent)");
        sub->callback([&chosen, name] { chosen = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        return dispatch(chosen, config_path, out_path);
    } catch (const ruin::config_error& e) {
        std::cerr << "ruinlab: " << e.what() << "\n";
        return 1;
    } catch (const ruin::numeric_error& e) {
        std::cerr << "ruinlab: numeric failure: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "ruinlab: " << e.what() << "\n";
        return 1;
    }
}
