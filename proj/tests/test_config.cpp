#include <cmath>

#include "doctest.h"
#include "nlgs/config.hpp"

using namespace nlgs;

TEST_SUITE("config") {

TEST_CASE("every preset round-trips through the parser") {
    for (const auto& name : preset_names()) {
        for (bool desk : {false, true}) {
            const RunConfig cfg = preset(name, desk);
            const std::string once = cfg.to_json();
            const RunConfig parsed = parse_config(once);
            CHECK(parsed.to_json() == once);
        }
    }
}

TEST_CASE("preset values pinned from the experiment definitions") {
    SUBCASE("pulse-exp-free") {
        const RunConfig c = preset("pulse-exp-free");
        CHECK(c.kernel.family == Kernel::Family::exponential);
        CHECK(c.kernel.shape == doctest::Approx(3.4));
        CHECK(c.grid.L == doctest::Approx(75.0 / 4.0));
        CHECK(c.params.B == doctest::Approx(std::cbrt(0.01) / 2.0).epsilon(1e-15));
        CHECK(c.bc_u.type == BcConfig::Type::free_decay);
        CHECK(c.bc_u.u_ref == 1.0);
        CHECK(c.bc_v.u_ref == 0.0);
    }
    SUBCASE("table1-mms") {
        const RunConfig c = preset("table1-mms");
        CHECK(c.experiment == ExperimentKind::mms);
        CHECK(c.grid.L == 1.0);  // domain [-1, 1]
        CHECK(c.mms.T == 1.0);
        CHECK(c.mms.dt_over_h == 2.0);
        CHECK(c.params.d_u == doctest::Approx(0.05));
        CHECK(c.params.A == doctest::Approx(6.0));
        CHECK(c.params.B == doctest::Approx(8.0));
        // desk variant trims the label list
        CHECK(preset("table1-mms", true).mms.labels ==
              std::vector<int>{40, 80, 160, 320});
    }
    SUBCASE("appendix-convergence") {
        const RunConfig c = preset("appendix-convergence");
        CHECK(c.grid.L == doctest::Approx(75.0 / 2.0));
        CHECK(c.convergence.dt_list.front() == doctest::Approx(0.0025));
        CHECK(c.convergence.dt_list[1] == doctest::Approx(0.00125));
        CHECK(c.bc_u.type == BcConfig::Type::neumann);
    }
    SUBCASE("pulse-exp-neumann doubles the computational domain") {
        const RunConfig c = preset("pulse-exp-neumann");
        CHECK(c.grid.L == doctest::Approx(75.0 / 2.0));
    }
    SUBCASE("domain-size-compare carries the two domain widths") {
        const RunConfig c = preset("domain-size-compare");
        REQUIRE(c.compare_legs.size() == 2);
        CHECK(c.compare_legs[0].config->grid.L == doctest::Approx(75.0 / 4.0));
        CHECK(c.compare_legs[1].config->grid.L == doctest::Approx(25.0));
    }
}

TEST_CASE("unknown keys are rejected with their path") {
    const std::string text = R"({
        "experiment": "simulate",
        "grid": {"L": 1.0, "M": 16, "bogus": 3}
    })";
    try {
        parse_config(text);
        FAIL("expected a ConfigError");
    } catch (const ConfigError& e) {
        const std::string what = e.what();
        CHECK(what.find("bogus") != std::string::npos);
        CHECK(what.find("grid") != std::string::npos);
    }
}

TEST_CASE("parse errors carry line numbers") {
    const std::string text = "{\n  \"experiment\": \"simulate\",\n  oops\n}";
    try {
        parse_config(text);
        FAIL("expected a ConfigError");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
}

TEST_CASE("semantic validation") {
    RunConfig c = preset("pulse-exp-free", true);

    SUBCASE("negative dt") {
        c.stepper.dt = -1.0;
        CHECK_THROWS_AS(c.validate(), ConfigError);
    }
    SUBCASE("odd grid") {
        c.grid.M = 15;
        CHECK_THROWS_AS(c.validate(), ConfigError);
    }
    SUBCASE("negative feed rate") {
        c.params.A = -0.1;
        CHECK_THROWS_AS(c.validate(), ConfigError);
    }
    SUBCASE("mixed periodic constraints") {
        c.bc_u.type = BcConfig::Type::periodic;
        CHECK_THROWS_AS(c.validate(), ConfigError);
    }
    SUBCASE("spectral solver needs a power-of-two grid") {
        c.bc_u.type = BcConfig::Type::periodic;
        c.bc_v.type = BcConfig::Type::periodic;
        c.solver = SolverKind::spectral;
        c.grid.M = 1000;
        CHECK_THROWS_AS(c.validate(), ConfigError);
        c.grid.M = 1024;
        CHECK_NOTHROW(c.validate());
    }
    SUBCASE("neumann requires M divisible by 4") {
        c.bc_u.type = BcConfig::Type::neumann;
        c.bc_v.type = BcConfig::Type::neumann;
        c.grid.M = 1026;
        CHECK_THROWS_AS(c.validate(), ConfigError);
    }
}

TEST_CASE("unknown preset name") {
    CHECK_THROWS_AS(preset("no-such-preset"), ConfigError);
}

}  // TEST_SUITE
