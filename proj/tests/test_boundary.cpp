#include <cmath>
#include <random>

#include "doctest.h"
#include "nlgs/extension.hpp"
#include "oracles.hpp"

using namespace nlgs;

TEST_SUITE("boundary") {

TEST_CASE("exterior values") {
    const double L = 1.0;
    SUBCASE("dirichlet returns the data") {
        const BoundaryConstraint bc{Dirichlet::constant(1.0)};
        CHECK(exterior_value(bc, L, 2.0, 0.3, 0.7) == 1.0);
        CHECK(exterior_value(bc, L, -5.0, 0.3, 0.7) == 1.0);
    }
    SUBCASE("free decay scales the boundary value") {
        const BoundaryConstraint bc{Free{2.0, 0.0}};
        CHECK(exterior_value(bc, L, 2.0, 0.0, 0.5) == doctest::Approx(0.125));
        CHECK(exterior_value(bc, L, -2.0, 0.5, 0.0) == doctest::Approx(0.125));
    }
    SUBCASE("constant state is preserved when u_ref matches") {
        const BoundaryConstraint bc{Free{2.0, 1.0}};
        for (double x : {1.5, 3.0, 100.0})
            CHECK(exterior_value(bc, L, x, 1.0, 1.0) == doctest::Approx(1.0));
    }
    SUBCASE("interior points are rejected") {
        const BoundaryConstraint bc{Free{2.0, 0.0}};
        CHECK_THROWS_AS(exterior_value(bc, L, 0.5, 0.0, 0.0), std::invalid_argument);
        CHECK_THROWS_AS(exterior_value(bc, L, -1.0, 0.0, 0.0), std::invalid_argument);
    }
}

TEST_CASE("Neumann constraint validates its geometry") {
    const Grid grid = Grid::from_half_width(1.0, 32);
    CHECK_THROWS_AS(assemble(Kernel::exponential(2.0), grid,
                             BoundaryConstraint{Neumann{0.3, 2.0, 0.0}}),
                    ConfigError);
    const Grid odd = Grid::from_half_width(1.0, 30);
    CHECK_THROWS_AS(assemble(Kernel::exponential(2.0), odd,
                             BoundaryConstraint{Neumann{0.5, 2.0, 0.0}}),
                    ConfigError);
}

TEST_CASE("extension of a matching constant is that constant") {
    const Grid grid = Grid::from_half_width(2.0, 64);
    const double kappa = 0.85;
    const auto op = assemble(Kernel::exponential(3.0), grid,
                             BoundaryConstraint{Neumann{1.0, 2.0, kappa}});
    const NeumannExtension ext(op);
    const Eigen::VectorXd inner = Eigen::VectorXd::Constant(ext.inner_count(), kappa);
    const Eigen::VectorXd full = ext.extend(inner);
    CHECK((full.array() - kappa).abs().maxCoeff() <= 1e-12);
}

TEST_CASE("extension zeroes the discrete flux on the collar") {
    const Grid grid = Grid::from_half_width(2.0, 64);
    const auto op = assemble(Kernel::algebraic(0.5), grid,
                             BoundaryConstraint{Neumann{1.0, 2.0, 0.0}});
    const NeumannExtension ext(op);

    Eigen::VectorXd inner(ext.inner_count());
    for (int i = 0; i < ext.inner_count(); ++i) {
        const double x = grid.node(ext.inner_begin() + i);
        inner[i] = std::exp(-2.0 * x * x);
    }
    const Eigen::VectorXd full = ext.extend(inner);

    // residual through the extension's own blocks
    CHECK(ext.residual_norm(full) <= 1e-10 * full.cwiseAbs().maxCoeff());

    // and through the assembled operator itself
    const Eigen::VectorXd Ku = op.apply(full);
    for (int i = 0; i < grid.node_count(); ++i) {
        const bool outer = i < ext.inner_begin() || i >= ext.inner_begin() + ext.inner_count();
        if (outer) CHECK(std::abs(Ku[i]) <= 1e-10 * full.cwiseAbs().maxCoeff());
    }

    // inner values pass through untouched
    CHECK((full.segment(ext.inner_begin(), ext.inner_count()) - inner)
              .cwiseAbs()
              .maxCoeff() == 0.0);
}

TEST_CASE("extension matches an independent dense solve") {
    const Grid grid = Grid::from_half_width(1.0, 48);
    const auto op = assemble(Kernel::exponential(2.0), grid,
                             BoundaryConstraint{Neumann{0.5, 2.0, 0.0}});
    const NeumannExtension ext(op);

    Eigen::VectorXd inner(ext.inner_count());
    for (int i = 0; i < ext.inner_count(); ++i) {
        const double x = grid.node(ext.inner_begin() + i);
        inner[i] = 1.0 / (1.0 + 4.0 * x * x);
    }
    const Eigen::VectorXd full = ext.extend(inner);

    // rebuild the block system from the full matrix and solve it with the
    // test-local Gaussian elimination
    const Eigen::MatrixXd m = op.full_linear_matrix();
    const int n = grid.node_count();
    const int ib = ext.inner_begin(), ic = ext.inner_count();
    std::vector<int> outer;
    for (int i = 0; i < n; ++i)
        if (i < ib || i >= ib + ic) outer.push_back(i);

    const int no = static_cast<int>(outer.size());
    Eigen::MatrixXd K(no, no);
    Eigen::VectorXd rhs(no);
    for (int r = 0; r < no; ++r) {
        for (int c = 0; c < no; ++c) K(r, c) = m(outer[r], outer[c]);
        double acc = op.affine()[outer[r]];
        for (int c = 0; c < ic; ++c) acc += m(outer[r], ib + c) * inner[c];
        rhs[r] = -acc;
    }
    const Eigen::VectorXd want = oracle::solve_dense(K, rhs);
    for (int r = 0; r < no; ++r)
        CHECK(full[outer[r]] == doctest::Approx(want[r]).epsilon(1e-10));
}

TEST_CASE("extension is affine in the inner data") {
    const Grid grid = Grid::from_half_width(1.0, 32);
    const auto op = assemble(Kernel::exponential(2.5), grid,
                             BoundaryConstraint{Neumann{0.5, 2.0, 0.4}});
    const NeumannExtension ext(op);

    std::mt19937 rng(5);
    std::normal_distribution<double> dist;
    Eigen::VectorXd a(ext.inner_count()), b(ext.inner_count());
    for (int i = 0; i < ext.inner_count(); ++i) {
        a[i] = dist(rng);
        b[i] = dist(rng);
    }
    const double alpha = 0.3, beta = 0.7;  // affine combination, weights sum to 1
    const Eigen::VectorXd combined = ext.extend(alpha * a + beta * b);
    const Eigen::VectorXd split = alpha * ext.extend(a) + beta * ext.extend(b);
    CHECK((combined - split).cwiseAbs().maxCoeff() <= 1e-10);
}

TEST_CASE("even inner data extends evenly") {
    const Grid grid = Grid::from_half_width(1.0, 32);
    const auto op = assemble(Kernel::algebraic(0.7), grid,
                             BoundaryConstraint{Neumann{0.5, 2.0, 0.0}});
    const NeumannExtension ext(op);
    Eigen::VectorXd inner(ext.inner_count());
    for (int i = 0; i < ext.inner_count(); ++i) {
        const double x = grid.node(ext.inner_begin() + i);
        inner[i] = std::cos(3.0 * x);
    }
    const Eigen::VectorXd full = ext.extend(inner);
    const int n = grid.node_count();
    for (int i = 0; i < n; ++i)
        CHECK(full[i] == doctest::Approx(full[n - 1 - i]).epsilon(1e-11));
}

}  // TEST_SUITE
