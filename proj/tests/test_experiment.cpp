#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "ruin/errors.hpp"
#include "ruin/experiment.hpp"

using namespace ruin;

namespace {

ExperimentConfig parse_text(const std::string& text) {
    std::istringstream in(text);
    return ExperimentConfig::parse(in);
}

const std::string kBaseConfig =
    "family=lomax\n"
    "alpha=3\n"
    "theta=2\n"
    "lambda=0.5\n"
    "seed=42\n"
    "n=1000\n"
    "workers=2\n";

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

}  // namespace

TEST_CASE("config parsing happy path") {
    const auto cfg = parse_text(kBaseConfig +
                                "u_list=25,50,100\n"
                                "x_list=1\n"
                                "t_list=5,50\n"
                                "psi_u_mode=asymptotic\n"
                                "constant_mode=half\n"
                                "inversion_step=0.002\n"
                                "inversion_s_max=40\n"
                                "# trailing comment\n");
    CHECK(cfg.family == ClaimFamily::Lomax);
    CHECK(cfg.u_list == std::vector<double>{25.0, 50.0, 100.0});
    CHECK(cfg.t_list == std::vector<double>{5.0, 50.0});
    CHECK(cfg.seed == 42);
    CHECK(cfg.psi_u_mode == PsiPlugin::Asymptotic);
    CHECK(cfg.constant_mode == ConstantMode::Half);
    CHECK(cfg.inversion.step == doctest::Approx(0.002));
    CHECK(cfg.make_model().rho() == doctest::Approx(0.5));
}

TEST_CASE("config parse errors carry line numbers") {
    try {
        parse_text("family=lomax\nalpha=3\ntheta=2\nlambda=0.5\nseed=1\nbogus_key=3\n");
        FAIL("expected config_error");
    } catch (const config_error& e) {
        CHECK(std::string(e.what()).find("line 6") != std::string::npos);
    }

    try {
        parse_text("family=lomax\nalpha=oops\n");
        FAIL("expected config_error");
    } catch (const config_error& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }

    CHECK_THROWS_AS(parse_text("family=lomax\nalpha=3\ntheta=2\nlambda=0.5\n"),
                    config_error);  // missing seed
    CHECK_THROWS_AS(parse_text("alpha=3\ntheta=2\nlambda=0.5\nseed=1\n"),
                    config_error);  // missing family
    CHECK_THROWS_AS(parse_text(kBaseConfig + "n=10\n"), config_error);
    CHECK_THROWS_AS(parse_text(kBaseConfig + "u_list=1,-2\n"), config_error);
    CHECK_THROWS_AS(parse_text(kBaseConfig + "inversion_step=0\n"), config_error);
}

TEST_CASE("net profit condition rejected at load") {
    try {
        parse_text("family=lomax\nalpha=3\ntheta=2\nlambda=1.25\nseed=1\n");
        FAIL("expected config_error");
    } catch (const config_error& e) {
        CHECK(std::string(e.what()).find("net profit condition") != std::string::npos);
    }
}

TEST_CASE("approx table") {
    auto cfg = parse_text(kBaseConfig +
                          "u_list=100\nx_list=1\npsi_u_mode=asymptotic\n");
    std::ostringstream csv;
    std::ostringstream log;
    CHECK(run_approx(cfg, csv, log) == 0);
    const auto lines = split_lines(csv.str());
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] ==
          "u,x,first_order,term1,term2,term3,second_order_total,fbar_u,fbar0_u");
    // term1 column is Fbar0(150) = 1/5776.
    std::istringstream row(lines[1]);
    std::string field;
    std::vector<double> values;
    while (std::getline(row, field, ',')) values.push_back(std::stod(field));
    REQUIRE(values.size() == 9);
    CHECK(values[3] == doctest::Approx(1.0 / 5776.0).epsilon(1e-12));
    CHECK(values[7] == doctest::Approx(1.0 / std::pow(51.0, 3.0)).epsilon(1e-12));

    // Empty grid: header only, exit 0.
    auto empty_cfg = parse_text(kBaseConfig + "x_list=1\n");
    std::ostringstream empty_csv;
    CHECK(run_approx(empty_cfg, empty_csv, log) == 0);
    CHECK(split_lines(empty_csv.str()).size() == 1);

    // Exponential family is rejected with a family diagnostic.
    auto exp_cfg = parse_text(
        "family=exponential\nrate=1\nlambda=0.5\nseed=7\nu_list=1\nx_list=1\n");
    std::ostringstream unused;
    try {
        run_approx(exp_cfg, unused, log);
        FAIL("expected domain_error");
    } catch (const std::domain_error& e) {
        CHECK(std::string(e.what()).find("regularly varying") != std::string::npos);
    }
}

TEST_CASE("convergence table is deterministic and sane") {
    auto cfg = parse_text(kBaseConfig + "u_list=25\nx_list=1\n");
    std::ostringstream csv1;
    std::ostringstream csv2;
    std::ostringstream log;
    CHECK(run_convergence(cfg, csv1, log) == 0);
    CHECK(run_convergence(cfg, csv2, log) == 0);
    CHECK(csv1.str() == csv2.str());

    const auto lines = split_lines(csv1.str());
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] ==
          "u,x,psi_mc,psi_mc_stderr,first_order,second_order_full,second_order_half,"
          "ratio1,ratio2_full,ratio2_half,error");
    std::istringstream row(lines[1]);
    std::string field;
    std::vector<std::string> fields;
    while (std::getline(row, field, ',')) fields.push_back(field);
    REQUIRE(fields.size() >= 10);
    const double psi_mc = std::stod(fields[2]);
    const double se = std::stod(fields[3]);
    CHECK(psi_mc >= 0.0);
    CHECK(psi_mc <= 1.0);
    CHECK(se > 0.0);
}

TEST_CASE("selftest passes on a small budget") {
    auto cfg = parse_text(kBaseConfig +
                          "n=10000\nu_list=1,5\nt_list=5,20\nx_list=1\n"
                          "inversion_step=0.001\ninversion_s_max=50\n");
    std::ostringstream out;
    std::ostringstream log;
    const int rc = run_selftest(cfg, out, log);
    INFO(out.str());
    CHECK(rc == 0);
    const auto lines = split_lines(out.str());
    CHECK(lines.size() == 7);
    for (const auto& line : lines) {
        CHECK(line.find("PASS") != std::string::npos);
        CHECK(line.find("measured=") != std::string::npos);
        CHECK(line.find("tolerance=") != std::string::npos);
    }
}
