#include "hetsec/csv.hpp"
#include "hetsec/sweep.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

using namespace hetsec;
using namespace hetsec::bench;

TEST_CASE("presets") {
    const auto f1 = SweepSpec::preset("fig1");
    CHECK(f1.parameter == SweepParameter::NAntennas);
    CHECK(f1.grid == std::vector<double>{50, 100, 150, 200, 250, 300});
    CHECK(f1.metrics.size() == 2);
    const auto f2 = SweepSpec::preset("fig2");
    CHECK(f2.parameter == SweepParameter::LambdaP);
    REQUIRE(f2.grid.size() == 9);
    CHECK(f2.grid.front() == doctest::Approx(1e-4));
    CHECK(f2.grid.back() == doctest::Approx(1.0));
    CHECK(f2.metrics.size() == 3);
    CHECK_THROWS_AS(SweepSpec::preset("fig3"), std::invalid_argument);
}

TEST_CASE("spec validation") {
    SweepSpec s = SweepSpec::preset("fig1");
    s.metrics.clear();
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
    s = SweepSpec::preset("fig1");
    s.grid = {100, 50};
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
    s.grid.clear();
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
    s = SweepSpec::preset("fig1");
    s.engines = EngineSel::MonteCarlo;
    s.trials = 50;
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
}

TEST_CASE("parameter and engine names") {
    for (auto sp : {SweepParameter::NAntennas, SweepParameter::LambdaP, SweepParameter::LambdaE,
                    SweepParameter::SUsers, SweepParameter::Rho}) {
        CHECK(parse_parameter(to_string(sp)) == sp);
    }
    CHECK(parse_parameter("rho_secrecy") == SweepParameter::Rho);
    CHECK_THROWS_AS(parse_parameter("alpha9"), std::invalid_argument);
    CHECK(parse_engine("mc") == EngineSel::MonteCarlo);
    CHECK(parse_engine("both") == EngineSel::Both);
    CHECK_THROWS_AS(parse_engine("magic"), std::invalid_argument);
}

TEST_CASE("applying a parameter") {
    const auto p = SystemParams::reference();
    CHECK(apply_parameter(p, SweepParameter::NAntennas, 300).n_antennas == 300);
    CHECK(apply_parameter(p, SweepParameter::LambdaP, 0.5).lambda_p == 0.5);
    CHECK(apply_parameter(p, SweepParameter::Rho, 0.25).rho_secrecy == 0.25);
    CHECK_THROWS_AS(apply_parameter(p, SweepParameter::NAntennas, 150.5), std::invalid_argument);
    CHECK_THROWS_AS(apply_parameter(p, SweepParameter::SUsers, 2.5), std::invalid_argument);
}

TEST_CASE("log grid") {
    const auto g = log_grid(1e-4, 1.0, 9);
    REQUIRE(g.size() == 9);
    CHECK(g[0] == 1e-4);
    CHECK(g[8] == 1.0);
    for (std::size_t i = 1; i < g.size(); ++i) {
        CHECK(g[i] / g[i - 1] == doctest::Approx(std::sqrt(10.0)));
    }
    CHECK_THROWS(log_grid(0.0, 1.0, 3));
}

TEST_CASE("sweep rows are ordered and failures do not stop the sweep") {
    SweepSpec s;
    s.parameter = SweepParameter::NAntennas;
    s.grid = {5, 50, 100};   // N = 5 < S = 10 is invalid
    s.metrics = parse_metric_list("ergodic_rate_macro,ergodic_rate_pico");
    s.threads = 2;
    const auto rows = run_sweep(s, SystemParams::reference());
    REQUIRE(rows.size() == 6);
    CHECK(!rows[0].ok());
    CHECK(rows[0].status.rfind("failed: ", 0) == 0);
    CHECK(!rows[1].ok());
    for (std::size_t i = 2; i < rows.size(); ++i) {
        CHECK(rows[i].ok());
        CHECK(rows[i].engine == "analytical");
        CHECK(rows[i].parameter == "n_antennas");
    }
    CHECK(rows[2].value == 50);
    CHECK(rows[2].metric == "ergodic_rate_macro");
    CHECK(rows[3].metric == "ergodic_rate_pico");
    CHECK(rows[4].value == 100);
    CHECK(rows[4].estimate > rows[2].estimate);
}

TEST_CASE("both engines interleave analytical then mc") {
    SweepSpec s;
    s.parameter = SweepParameter::LambdaP;
    s.grid = {1e-3, 1e-2};
    s.metrics = parse_metric_list("assoc_frac_macro");
    s.engines = EngineSel::Both;
    s.trials = 200;
    auto p = SystemParams::reference();
    p.sim_radius = 80.0;
    const auto rows = run_sweep(s, p);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].engine == "analytical");
    CHECK(rows[0].trials == 0);
    CHECK(rows[1].engine == "mc");
    CHECK(rows[1].trials == 200);
    CHECK(rows[1].seed == 42);
    CHECK(rows[1].err_halfwidth > 0.0);
    CHECK(rows[2].value == 1e-2);
    CHECK(run_sweep(s, p) == rows);
}

TEST_CASE("CSV round trip") {
    std::vector<CurvePoint> rows(3);
    rows[0] = {"lambda_p", 3.1622776601683795e-4, "secrecy_outage_pico", "analytical",
               0.123456789012345678, 0.0, 0, 0, "ok"};
    rows[1] = {"lambda_p", 1e-2, "eve_cdf_macro:0.3", "mc", 0.4, 0.0096, 10000, 42, "ok"};
    rows[2] = {"n_antennas", 5, "ergodic_rate_macro", "analytical",
               std::numeric_limits<double>::quiet_NaN(), 0.0, 0, 0,
               "failed: N, S mismatch\nsecond line"};
    std::stringstream ss;
    write_csv(ss, rows, "test run");
    const std::string text = ss.str();
    CHECK(text.rfind("# test run\n", 0) == 0);
    CHECK(text.find(kCsvHeader) != std::string::npos);
    const auto back = read_csv(ss);
    REQUIRE(back.size() == 3);
    CHECK(back[0] == rows[0]);
    CHECK(back[1] == rows[1]);
    CHECK(std::isnan(back[2].estimate));
    CHECK(!back[2].ok());
    CHECK(back[2].status.find('\n') == std::string::npos);
    CHECK(back[2].status.find(',') == std::string::npos);
}

TEST_CASE("CSV reader rejects malformed input") {
    std::istringstream missing_header("lambda_p,1,x,analytical,1,0,0,0,ok\n");
    CHECK_THROWS_AS(read_csv(missing_header), std::runtime_error);
    std::istringstream short_row(std::string(kCsvHeader) + "\nlambda_p,1,x\n");
    CHECK_THROWS_AS(read_csv(short_row), std::runtime_error);
    std::istringstream bad_number(std::string(kCsvHeader) +
                                  "\nlambda_p,abc,x,analytical,1,0,0,0,ok\n");
    try {
        read_csv(bad_number);
        FAIL("expected an exception");
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}
