#pragma once

#include <Eigen/Core>
#include <vector>

#include "nlgs/boundary.hpp"
#include "nlgs/grid.hpp"
#include "nlgs/kernel.hpp"

namespace nlgs {

/// Piecewise-linear hat of width 2h: max(0, 1 - |t|/h).
double tent(double t, double h);

/// Quadrature weights w_j, j = -M..M, for the operator sum
///   -[Ku](x_i) ~ sum_j (u(x_i) - u(x_{i-j})) w_j + C u_i - D_i.
///
/// w_0 = 0 and w_j = w_{-j}; interior weights are second differences of F
/// divided by h and are non-negative because F is convex.
struct WeightSet {
    int M = 0;
    double f1 = 0.0;             // int_0^h y^2 gamma
    std::vector<double> w;       // size 2M+1, offset j stored at w[j + M]

    double at(int j) const { return w[j + M]; }
    double sum() const;
};

WeightSet compute_weights(const Kernel& kernel, const Grid& grid);

/// Dense realization of -K on a grid under a boundary constraint:
///   (-K u)_i = (A u)_i + c_left_i u(-L) + c_right_i u(+L) + b_i.
/// Dirichlet folds every exterior sample into b; free/Neumann couple the
/// exterior to the boundary values through c_left/c_right.
class DiscreteOperator {
public:
    DiscreteOperator(const Kernel& kernel, Grid grid, BoundaryConstraint bc,
                     double tail_tol);

    /// -K u. u must have grid().node_count() entries.
    Eigen::VectorXd apply(const Eigen::VectorXd& u) const;

    /// Rows [row0, row0 + nrows) of -K u.
    Eigen::VectorXd apply_rows(const Eigen::VectorXd& u, int row0, int nrows) const;

    /// Linear part with the boundary couplings folded into columns 0 and N-1,
    /// so that -K u = full_linear_matrix() u + affine().
    Eigen::MatrixXd full_linear_matrix() const;

    const Grid& grid() const { return grid_; }
    const BoundaryConstraint& constraint() const { return bc_; }
    const Kernel& kernel() const { return kernel_; }
    const WeightSet& weights() const { return weights_; }
    const Eigen::MatrixXd& matrix() const { return A_; }
    const Eigen::VectorXd& affine() const { return b_; }
    const Eigen::VectorXd& coupling_left() const { return c_left_; }
    const Eigen::VectorXd& coupling_right() const { return c_right_; }
    double tail_mass_beyond_window() const { return C_; }

private:
    Kernel kernel_;
    Grid grid_;
    BoundaryConstraint bc_;
    WeightSet weights_;
    double C_ = 0.0;  // tail mass beyond L_W = 2L
    Eigen::MatrixXd A_;
    Eigen::VectorXd b_, c_left_, c_right_;
};

/// Build the dense operator for -K with window L_W = 2L.
DiscreteOperator assemble(const Kernel& kernel, const Grid& grid,
                          const BoundaryConstraint& bc, double tail_tol = 1e-12);

}  // namespace nlgs
