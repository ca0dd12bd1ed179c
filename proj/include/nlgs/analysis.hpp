#pragma once

#include <Eigen/Core>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nlgs/grid.hpp"

namespace nlgs {

/// Discrete L^p norm of u - ref with composite-trapezoid weights (half
/// weight at the endpoints), p = 1 or 2.
double lp_error(const Eigen::VectorXd& u, const Eigen::VectorXd& ref, int p, double h);

/// Same against a callable reference sampled at the grid nodes.
double lp_error(const Eigen::VectorXd& u, const std::function<double(double)>& ref,
                int p, const Grid& grid);

/// log(e_fine/e_coarse) / log(h_fine/h_coarse). Returns nullopt when either
/// error vanishes (order undefined rather than NaN).
std::optional<double> observed_order(double e_coarse, double e_fine, double h_coarse,
                                     double h_fine);

/// Restriction of a fine-grid function to the nodes of a coarser nested
/// grid (same L, fine.M a multiple of coarse.M).
Eigen::VectorXd restrict_to_coarse(const Eigen::VectorXd& fine, const Grid& fine_grid,
                                   const Grid& coarse_grid);

struct ProfileMetrics {
    double max_value = 0.0;
    double max_location = 0.0;
    /// Measure of {x : v(x) >= 0.95 max v}, by linear interpolation.
    double plateau_width = 0.0;
    double boundary_value = 0.0;  // value at x = +L
    /// Strict sign changes of the discrete derivative across the level set
    /// span; two or more indicates a cat-ear (double-peak) top.
    int oscillation_count = 0;
};

ProfileMetrics profile_metrics(const Eigen::VectorXd& v, const Grid& grid,
                               double level_fraction = 0.95);

/// Same on an explicit uniformly spaced node vector (used for periodic grids,
/// which drop the right endpoint).
ProfileMetrics profile_metrics(const Eigen::VectorXd& v, const Eigen::VectorXd& x,
                               double level_fraction = 0.95);

struct ConvergenceRow {
    int label = 0;  // resolution label (paper-table M)
    double h = 0.0;
    double dt = 0.0;
    double error_u = 0.0;
    double error_v = 0.0;
    std::optional<double> order_u, order_v;
};

struct ConvergenceReport {
    int norm_p = 1;
    std::string reference;  // "exact" or "finest-mesh"
    std::vector<ConvergenceRow> rows;

    /// Fill order columns from consecutive rows.
    void compute_orders();
    double average_order_u() const;
    double average_order_v() const;
};

}  // namespace nlgs
