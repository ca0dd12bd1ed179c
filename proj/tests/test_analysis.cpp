#include <cmath>
#include <numbers>

#include "doctest.h"
#include "nlgs/analysis.hpp"
#include "nlgs/errors.hpp"

using namespace nlgs;

TEST_SUITE("analysis") {

TEST_CASE("lp_error basics") {
    const Grid grid = Grid::from_half_width(1.0, 64);
    Eigen::VectorXd u = Eigen::VectorXd::Random(grid.node_count());

    CHECK(lp_error(u, u, 1, grid.h) == 0.0);
    CHECK(lp_error(u, u, 2, grid.h) == 0.0);

    // constant offset: trapezoid weights integrate it to exactly c * 2L
    const double c = 0.37;
    const Eigen::VectorXd ref = u.array() + c;
    CHECK(lp_error(u, ref, 1, grid.h) == doctest::Approx(c * 2.0 * grid.L).epsilon(1e-13));

    CHECK_THROWS_AS(lp_error(u, Eigen::VectorXd::Zero(3), 1, grid.h),
                    std::invalid_argument);
    CHECK_THROWS_AS(lp_error(u, u, 3, grid.h), std::invalid_argument);
}

TEST_CASE("L2 norm of sin(pi x) on [-1, 1] tends to 1") {
    double prev = 0.0;
    for (int M : {64, 128}) {
        const Grid grid = Grid::from_half_width(1.0, M);
        Eigen::VectorXd u(grid.node_count());
        for (int i = 0; i < grid.node_count(); ++i)
            u[i] = std::sin(std::numbers::pi * grid.node(i));
        const double err = std::abs(
            lp_error(u, Eigen::VectorXd::Zero(grid.node_count()), 2, grid.h) - 1.0);
        if (M == 64) prev = err;
        else CHECK(err <= prev);  // trapezoid aliases sin^2 to near round-off
        CHECK(err < 1e-3);
    }
}

TEST_CASE("callable reference overload") {
    const Grid grid = Grid::from_half_width(2.0, 32);
    Eigen::VectorXd u(grid.node_count());
    for (int i = 0; i < grid.node_count(); ++i) u[i] = grid.node(i);
    const double err = lp_error(u, [](double x) { return x; }, 1, grid);
    CHECK(err == 0.0);
}

TEST_CASE("norm scales homogeneously") {
    const Grid grid = Grid::from_half_width(1.0, 32);
    Eigen::VectorXd u = Eigen::VectorXd::Random(grid.node_count());
    const Eigen::VectorXd zero = Eigen::VectorXd::Zero(grid.node_count());
    for (int p : {1, 2}) {
        const double base = lp_error(u, zero, p, grid.h);
        const double scaled = lp_error((3.5 * u).eval(), zero, p, grid.h);
        CHECK(scaled == doctest::Approx(3.5 * base).epsilon(1e-13));
    }
}

TEST_CASE("observed order") {
    CHECK(*observed_order(4.0, 1.0, 0.2, 0.1) == doctest::Approx(2.0));
    // Table rows: error quadruples backwards between doublings -> order ~2
    CHECK(*observed_order(8.35e-5, 2.16e-5, 0.025, 0.0125) ==
          doctest::Approx(1.95).epsilon(0.005));
    CHECK(*observed_order(3.70e-3, 9.58e-4, 0.14648, 0.073242) ==
          doctest::Approx(1.95).epsilon(0.005));
    CHECK(!observed_order(0.0, 1.0, 0.2, 0.1).has_value());
    CHECK(!observed_order(1.0, 0.0, 0.2, 0.1).has_value());
    CHECK_THROWS_AS(observed_order(1.0, 1.0, 0.1, 0.2), std::invalid_argument);
}

TEST_CASE("restriction to nested grids") {
    const Grid fine = Grid::from_half_width(1.0, 64);
    const Grid coarse = Grid::from_half_width(1.0, 16);
    Eigen::VectorXd f(fine.node_count());
    for (int i = 0; i < fine.node_count(); ++i) f[i] = std::cos(fine.node(i));
    const Eigen::VectorXd r = restrict_to_coarse(f, fine, coarse);
    REQUIRE(r.size() == coarse.node_count());
    for (int i = 0; i < coarse.node_count(); ++i)
        CHECK(r[i] == std::cos(coarse.node(i)));

    const Grid not_nested = Grid::from_half_width(1.0, 24);
    CHECK_THROWS_AS(restrict_to_coarse(f, fine, not_nested), std::invalid_argument);
    const Grid other_domain = Grid::from_half_width(2.0, 16);
    CHECK_THROWS_AS(restrict_to_coarse(f, fine, other_domain), std::invalid_argument);
}

TEST_CASE("report order columns and averages") {
    ConvergenceReport rep;
    rep.rows = {{256, 0.2, 0.01, 4e-3, 8e-3, {}, {}},
                {512, 0.1, 0.005, 1e-3, 4e-3, {}, {}},
                {1024, 0.05, 0.0025, 2.5e-4, 2e-3, {}, {}}};
    rep.compute_orders();
    CHECK(!rep.rows[0].order_u.has_value());
    CHECK(*rep.rows[1].order_u == doctest::Approx(2.0));
    CHECK(*rep.rows[1].order_v == doctest::Approx(1.0));
    CHECK(rep.average_order_u() == doctest::Approx(2.0));
    CHECK(rep.average_order_v() == doctest::Approx(1.0));
}

TEST_CASE("profile metrics") {
    SUBCASE("constant profile spans the whole domain") {
        const Grid grid = Grid::from_half_width(3.0, 32);
        const Eigen::VectorXd v = Eigen::VectorXd::Constant(grid.node_count(), 1.4);
        const ProfileMetrics m = profile_metrics(v, grid);
        CHECK(m.max_value == doctest::Approx(1.4));
        CHECK(m.plateau_width == doctest::Approx(2.0 * grid.L));
        CHECK(m.oscillation_count == 0);
        CHECK(m.boundary_value == doctest::Approx(1.4));
    }
    SUBCASE("smooth bump: 95% level-set width matches the analytic value") {
        // v = exp(-x^2): v >= 0.95 iff |x| <= sqrt(-ln 0.95)
        const Grid grid = Grid::from_half_width(4.0, 1024);
        Eigen::VectorXd v(grid.node_count());
        for (int i = 0; i < grid.node_count(); ++i)
            v[i] = std::exp(-grid.node(i) * grid.node(i));
        const ProfileMetrics m = profile_metrics(v, grid);
        const double analytic = 2.0 * std::sqrt(-std::log(0.95));
        CHECK(m.plateau_width == doctest::Approx(analytic).epsilon(0.1));
        CHECK(m.max_location == doctest::Approx(0.0));
        CHECK(m.oscillation_count <= 1);
    }
    SUBCASE("two symmetric maxima count as oscillations") {
        const Grid grid = Grid::from_half_width(2.0, 256);
        Eigen::VectorXd v(grid.node_count());
        for (int i = 0; i < grid.node_count(); ++i) {
            const double x = grid.node(i);
            // cat-ear-like: two bumps at +-0.5
            v[i] = std::exp(-8.0 * (x - 0.5) * (x - 0.5)) +
                   std::exp(-8.0 * (x + 0.5) * (x + 0.5));
        }
        const ProfileMetrics m = profile_metrics(v, grid);
        CHECK(m.oscillation_count >= 2);
    }
    SUBCASE("degenerate all-zero profile raises") {
        const Grid grid = Grid::from_half_width(1.0, 16);
        const Eigen::VectorXd v = Eigen::VectorXd::Zero(grid.node_count());
        CHECK_THROWS_AS(profile_metrics(v, grid), NumericalError);
    }
}

}  // TEST_SUITE
