#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "susyqm/verify.hpp"

using namespace susyqm;

namespace {

int run_cli(const std::string& args) {
    const std::string cmd = std::string(SUSYQM_CLI_PATH) + " " + args;
    const int status = std::system(cmd.c_str());
    REQUIRE(WIFEXITED(status));
    return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

const std::vector<std::string> kRegistryNames = {
    "eq10_complex_shift",  "eq13_potential",          "eq14_identity",
    "eq18_asymptotics",    "eq19_levinson",           "eq22_phase_equivalence",
    "eq23_singular_reconstruction", "eq24_partner_solve", "eq25_logdet",
    "eq26_27_identity",    "eq36_37_transform",       "eq39_integral",
    "eq40_born",           "eq53_55_representation",  "eq60_detm"};

}  // namespace

TEST_CASE("registry contents") {
    const auto& registry = verification_registry();
    REQUIRE(registry.size() == kRegistryNames.size());
    for (size_t i = 0; i < registry.size(); ++i) CHECK(registry[i].name == kRegistryNames[i]);
    for (size_t i = 0; i + 1 < registry.size(); ++i)
        CHECK(registry[i].name < registry[i + 1].name);
}

TEST_CASE("every registered check passes at its own tolerance") {
    std::vector<VerificationReport> reports = run_all_checks(RunConfig{});
    REQUIRE(reports.size() == kRegistryNames.size());
    for (size_t i = 0; i < reports.size(); ++i) {
        CAPTURE(reports[i].check_name);
        CHECK(reports[i].check_name == kRegistryNames[i]);
        CHECK(reports[i].passed);
        CHECK(reports[i].max_abs_error <= reports[i].tolerance);
        CHECK(reports[i].runtime_ms >= 0.0);
    }
}

TEST_CASE("tolerance overrides flip a check") {
    RunConfig config;
    config.tolerance_overrides["eq14_identity"] = 1e-30;
    CHECK(config.tolerance_for("eq14_identity", 1e-9) == 1e-30);
    CHECK(config.tolerance_for("eq13_potential", 1e-6) == 1e-6);

    VerificationReport report = run_check("eq14_identity", config);
    CHECK(report.tolerance == 1e-30);
    CHECK_FALSE(report.passed);

    CHECK_THROWS_AS(run_check("no_such_check", RunConfig{}), std::out_of_range);
}

TEST_CASE("kappa grid") {
    const Eigen::VectorXd values = KappaGrid{}.values();
    REQUIRE(values.size() == 25);
    CHECK(values[0] == 0.3);
    CHECK(values[24] == doctest::Approx(5.0).epsilon(1e-14));
    const double step = (5.0 - 0.3) / 24.0;
    for (int i = 0; i + 1 < values.size(); ++i)
        CHECK(values[i + 1] - values[i] == doctest::Approx(step).epsilon(1e-12));

    const Eigen::VectorXd single = KappaGrid{0.5, 0.5, 1}.values();
    REQUIRE(single.size() == 1);
    CHECK(single[0] == 0.5);

    CHECK_THROWS_AS(KappaGrid({0.0, 1.0, 5}).values(), std::domain_error);
    CHECK_THROWS_AS(KappaGrid({-1.0, 1.0, 5}).values(), std::domain_error);
    CHECK_THROWS_AS(KappaGrid({2.0, 1.0, 5}).values(), std::domain_error);
    CHECK_THROWS_AS(KappaGrid({0.3, 5.0, 0}).values(), std::domain_error);
}

TEST_CASE("number formatting") {
    for (double v : {1.0 / 3.0, 1e-300, -2.5e17, 0.1, 12345.6789}) {
        const std::string text = format_json_number(v);
        CHECK(std::strtod(text.c_str(), nullptr) == v);
    }
    CHECK(format_json_number(std::numeric_limits<double>::infinity()) == "null");
    CHECK(format_json_number(-std::numeric_limits<double>::infinity()) == "null");
    CHECK(format_json_number(std::nan("")) == "null");
    CHECK(format_csv_number(0.123456789123) == "0.123456789");
    CHECK(format_csv_number(2.0) == "2");
}

TEST_CASE("report JSON layout") {
    VerificationReport report;
    report.check_name = "demo";
    report.params = {{"n_max", 3.0}};
    report.grid = "r in [0,1]";
    report.max_abs_error = 0.5;
    report.tolerance = 0.25;
    report.passed = true;
    report.runtime_ms = 1.5;
    CHECK(to_json(report) ==
          "{\"check_name\":\"demo\",\"params\":{\"n_max\":3},\"grid\":\"r in [0,1]\","
          "\"max_abs_error\":0.5,\"tolerance\":0.25,\"passed\":true,\"runtime_ms\":1.5}");
    CHECK(to_json(std::vector<VerificationReport>{}) == "[]");
}

TEST_CASE("report JSON round trip is byte identical") {
    VerificationReport a;
    a.check_name = "alpha";
    a.params = {{"kappa", 0.3}, {"n_max", 2.0}};
    a.grid = "kappa in [0.3,5.0]";
    a.max_abs_error = 1.0 / 3.0;
    a.tolerance = 1e-9;
    a.passed = true;
    a.runtime_ms = 0.125;
    VerificationReport b;
    b.check_name = "beta";
    b.grid = "spot";
    b.max_abs_error = std::nan("");
    b.tolerance = 1e-6;
    b.passed = false;
    b.runtime_ms = 7.0;
    const std::string once = to_json(std::vector<VerificationReport>{a, b});
    const std::string twice = to_json(reports_from_json(once));
    CHECK(once == twice);
    CHECK(once.find("\"max_abs_error\":null") != std::string::npos);

    CHECK_THROWS_AS(reports_from_json("{\"check_name\":\"x\"}"), std::invalid_argument);
    CHECK(reports_from_json("[]").empty());
}

TEST_CASE("report CSV layout") {
    VerificationReport report;
    report.check_name = "a,b\"c";
    report.params = {{"alpha", 1.5}, {"n_max", 3.0}};
    report.grid = "plain";
    report.max_abs_error = 0.5;
    report.tolerance = 0.25;
    report.passed = false;
    report.runtime_ms = 2.0;
    CHECK(to_csv(std::vector<VerificationReport>{report}) ==
          "check_name,params,grid,max_abs_error,tolerance,passed,runtime_ms\n"
          "\"a,b\"\"c\",alpha=1.5;n_max=3,plain,0.5,0.25,false,2\n");
}

TEST_CASE("table serialization") {
    Table table;
    table.columns = {"x", "y"};
    table.rows = {{1.0, 2.0}, {3.0, 4.5}};
    CHECK(to_json(table) == "{\"columns\":[\"x\",\"y\"],\"rows\":[[1,2],[3,4.5]]}");
    CHECK(to_csv(table) == "x,y\n1,2\n3,4.5\n");
}

TEST_CASE("command line verify-all") {
    CHECK(run_cli("verify-all > /dev/null 2>&1") == 0);
    CHECK(run_cli("verify-all --tol eq14_identity=1e-30 > /dev/null 2>&1") == 1);
}

TEST_CASE("command line usage errors") {
    CHECK(run_cli("> /dev/null 2>&1") == 2);
    CHECK(run_cli("--definitely-not-a-flag > /dev/null 2>&1") == 2);
    CHECK(run_cli("scatter --kappa-count 0 > /dev/null 2>&1") == 2);
    CHECK(run_cli("frobnicate > /dev/null 2>&1") == 2);
}

TEST_CASE("command line file output") {
    CHECK(run_cli("verify-all --format json --out /tmp/susyqm_test_verify.json "
                  "> /dev/null 2>&1") == 0);
    std::vector<VerificationReport> reports =
        reports_from_json(slurp("/tmp/susyqm_test_verify.json"));
    REQUIRE(reports.size() == kRegistryNames.size());
    for (const auto& r : reports) CHECK(r.passed);

    CHECK(run_cli("identity --n 2 --format csv --out /tmp/susyqm_test_identity.csv "
                  "> /dev/null 2>&1") == 0);
    const std::string csv = slurp("/tmp/susyqm_test_identity.csv");
    CHECK(csv.rfind("z,pot_sum,pot_closed,", 0) == 0);
}
