#include <cmath>
#include <numbers>

#include "doctest.h"
#include "nlgs/model.hpp"
#include "oracles.hpp"

using namespace nlgs;

namespace {

GrayScottParams table_params() { return {0.05, 0.01, 6.0, 8.0}; }

}  // namespace

TEST_SUITE("model") {

TEST_CASE("(1, 0) with matching exterior data is a fixed point") {
    const Grid grid = Grid::from_half_width(1.0, 48);
    const Kernel k = Kernel::exponential(4.0);
    const auto op_u = assemble(k, grid, BoundaryConstraint{Dirichlet::constant(1.0)});
    const auto op_v = assemble(k, grid, BoundaryConstraint{Dirichlet::constant(0.0)});
    SystemState s{Eigen::VectorXd::Ones(grid.node_count()),
                  Eigen::VectorXd::Zero(grid.node_count()), 0.0};
    const Derivatives d = rhs(s, GrayScottParams{1.0, 0.01, 0.01, 0.1}, op_u, op_v);
    CHECK(d.du.cwiseAbs().maxCoeff() <= 1e-12);
    CHECK(d.dv.cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("(0, 0) with zero exterior data feeds at rate A") {
    const Grid grid = Grid::from_half_width(1.0, 32);
    const Kernel k = Kernel::algebraic(0.5);
    const auto op = assemble(k, grid, BoundaryConstraint{Dirichlet::constant(0.0)});
    SystemState s{Eigen::VectorXd::Zero(grid.node_count()),
                  Eigen::VectorXd::Zero(grid.node_count()), 0.0};
    const GrayScottParams p{1.0, 0.01, 0.37, 0.2};
    const Derivatives d = rhs(s, p, op, op);
    CHECK((d.du.array() - p.A).abs().maxCoeff() <= 1e-13);
    CHECK(d.dv.cwiseAbs().maxCoeff() <= 1e-13);
}

TEST_CASE("grid mismatch is rejected") {
    const Grid g1 = Grid::from_half_width(1.0, 32);
    const Kernel k = Kernel::exponential(1.0);
    const auto op = assemble(k, g1, BoundaryConstraint{Dirichlet::constant(0.0)});
    SystemState s{Eigen::VectorXd::Zero(10), Eigen::VectorXd::Zero(10), 0.0};
    CHECK_THROWS_AS(rhs(s, GrayScottParams{1, 1, 1, 1}, op, op), std::invalid_argument);
}

TEST_CASE("pulse initial conditions") {
    const Grid grid = Grid::from_half_width(18.75, 1024);
    const SystemState s = pulse_initial_conditions(grid, 0.1, 3.0);

    // center values, checked against an independent high-precision evaluation
    const int mid = grid.M / 2;
    CHECK(s.u[mid] == doctest::Approx(-1.6729132786895989).epsilon(1e-12));
    CHECK(s.v[mid] == doctest::Approx(3.6623111959654073).epsilon(1e-12));

    // far field: the Gaussian tail has decayed to 1 well inside double range
    CHECK(s.u[0] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(s.u[grid.M] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(s.v[0] == 0.0);

    CHECK_THROWS_AS(pulse_initial_conditions(grid, -0.1, 3.0), std::invalid_argument);
    CHECK_THROWS_AS(pulse_initial_conditions(grid, 0.1, 0.0), std::invalid_argument);
}

TEST_CASE("manufactured case: time factor derivative consistency") {
    const ManufacturedCase mc = ManufacturedCase::cosine_case();
    for (double t : {0.0, 0.5, 1.3}) {
        for (double x : {-0.7, 0.25}) {
            const double d = 1e-5;
            const double fd_u = (mc.exact_u(x, t + d) - mc.exact_u(x, t - d)) / (2.0 * d);
            const double fd_v = (mc.exact_v(x, t + d) - mc.exact_v(x, t - d)) / (2.0 * d);
            CHECK(mc.exact_u_t(x, t) == doctest::Approx(fd_u).epsilon(1e-8));
            CHECK(mc.exact_v_t(x, t) == doctest::Approx(fd_v).epsilon(1e-8));
        }
    }
}

TEST_CASE("manufactured sources: two independent quadrature routes agree") {
    const Kernel k = Kernel::exponential(1.0);
    const Grid grid = Grid::from_half_width(1.0, 16);
    const ManufacturedCase mc = ManufacturedCase::cosine_case();
    const ManufacturedSources src(mc, grid, k, table_params());

    // library K U at x = 0.25 vs the Gauss-Legendre oracle
    const double x = 0.25;
    auto conv = [&](double s) { return mc.U(s) * k.density(x - s); };
    const double KU_oracle = oracle::integrate(conv, -1.0, x, 1e-14) +
                             oracle::integrate(conv, x, 1.0, 1e-14) - mc.U(x);
    const int idx = grid.M / 2 + static_cast<int>(std::lround(x / grid.h));
    REQUIRE(grid.node(idx) == doctest::Approx(x));
    CHECK(src.K_U()[idx] == doctest::Approx(KU_oracle).epsilon(1e-10));

    // f_u at (x = 0.25, t = 0.5) assembled from the oracle route
    const double t = 0.5;
    const GrayScottParams p = table_params();
    const double u = mc.exact_u(x, t), v = mc.exact_v(x, t);
    const double want =
        mc.exact_u_t(x, t) - p.d_u * mc.Tu(t) * KU_oracle - p.A * (1.0 - u) + u * v * v;
    const Derivatives f = src.eval(t);
    CHECK(f.du[idx] == doctest::Approx(want).epsilon(1e-10));
}

TEST_CASE("sources reduce to -A where the exact solution vanishes identically") {
    // synthetic case with u = 0 everywhere: f_u = u_t - d_u Ku - A(1-u) + uv^2 = -A
    ManufacturedCase mc;
    mc.U = [](double) { return 0.0; };
    mc.V = [](double x) { return std::cos(std::numbers::pi * x / 2.0); };
    mc.Tu = [](double) { return 1.0; };
    mc.dTu = [](double) { return 0.0; };
    mc.Tv = [](double t) { return std::exp(-t); };
    mc.dTv = [](double t) { return -std::exp(-t); };
    const Grid grid = Grid::from_half_width(1.0, 16);
    const GrayScottParams p = table_params();
    const ManufacturedSources src(mc, grid, Kernel::exponential(1.0), p);
    const Derivatives f = src.eval(0.3);
    CHECK((f.du.array() + p.A).abs().maxCoeff() <= 1e-12);
}

TEST_CASE("discrete rhs with oracle sources has an O(h^2) residual") {
    const Kernel k = Kernel::exponential(1.0);
    const GrayScottParams p = table_params();
    const ManufacturedCase mc = ManufacturedCase::cosine_case();

    double prev = 0.0;
    for (int M : {160, 320}) {
        const Grid grid = Grid::from_half_width(1.0, M);
        const auto op_u = assemble(k, grid, BoundaryConstraint{Dirichlet::constant(0.0)});
        const auto op_v = assemble(k, grid, BoundaryConstraint{Dirichlet::constant(0.0)});
        const ManufacturedSources src(mc, grid, k, p);

        const double t = 0.0;
        SystemState s = src.exact_state(t);
        const Derivatives d = rhs(s, p, op_u, op_v, &src);

        double res = 0.0;
        for (int i = 0; i < grid.node_count(); ++i) {
            const double x = grid.node(i);
            res = std::max(res, std::abs(d.du[i] - mc.exact_u_t(x, t)));
            res = std::max(res, std::abs(d.dv[i] - mc.exact_v_t(x, t)));
        }
        if (M == 160) {
            prev = res;
        } else {
            CHECK(res < prev);
            CHECK(prev / res > 3.0);  // O(h^2) spatial residual
        }
    }
}

TEST_CASE("quasilinear determinant") {
    const GrayScottParams p{1.0, 0.01, 0.01, std::cbrt(0.01) / 2.0};
    SystemState s{Eigen::VectorXd::Ones(5), Eigen::VectorXd::Zero(5), 0.0};

    SUBCASE("homogeneous state (1, 0)") {
        const double eps = 1.0 / 3.4;
        const Eigen::VectorXd det = quasilinear_det(s, eps, p);
        const double want = (p.d_u + eps * eps * p.A) * (p.d_v + eps * eps * p.B);
        CHECK((det.array() - want).abs().maxCoeff() <= 1e-15);
    }
    SUBCASE("local limit eps = 0") {
        s.v = Eigen::VectorXd::Constant(5, 2.3);
        const Eigen::VectorXd det = quasilinear_det(s, 0.0, p);
        CHECK((det.array() - p.d_u * p.d_v).abs().maxCoeff() <= 1e-17);
    }
    SUBCASE("matches the 2x2 determinant assembled by hand") {
        s.u = Eigen::VectorXd::Constant(5, 0.4);
        s.v = Eigen::VectorXd::Constant(5, 2.0);
        const double eps = 0.5, e2 = 0.25;
        const double a11 = p.d_u + e2 * p.A + e2 * 4.0;
        const double a12 = 2.0 * e2 * 0.8;
        const double a21 = -e2 * 4.0;
        const double a22 = p.d_v + e2 * p.B - 2.0 * e2 * 0.8;
        const Eigen::VectorXd det = quasilinear_det(s, eps, p);
        CHECK(det[2] == doctest::Approx(a11 * a22 - a12 * a21).epsilon(1e-14));
    }
}

}  // TEST_SUITE
