#pragma once

#include <Eigen/Core>
#include <functional>

#include "nlgs/quadrature.hpp"

namespace nlgs {

struct GrayScottParams {
    double d_u = 1.0;   // diffusivity of u
    double d_v = 0.01;  // diffusivity of v
    double A = 0.01;    // feed rate
    double B = 0.0;     // removal rate

    void validate() const {
        if (!(d_u > 0.0 && d_v > 0.0 && A > 0.0 && B > 0.0))
            throw ConfigError("Gray-Scott parameters must all be positive");
    }
};

struct SystemState {
    Eigen::VectorXd u, v;
    double t = 0.0;
};

struct Derivatives {
    Eigen::VectorXd du, dv;
};

/// A closed-form space-time product solution used for convergence studies,
/// with zero exterior data:
///   u(x, t) = Tu(t) U(x),   v(x, t) = Tv(t) V(x).
/// Source terms are built from K U and K V evaluated per node by adaptive
/// quadrature against the exact solution.
struct ManufacturedCase {
    std::function<double(double)> U, V;
    std::function<double(double)> Tu, Tv;      // time factors
    std::function<double(double)> dTu, dTv;    // their derivatives

    double exact_u(double x, double t) const { return Tu(t) * U(x); }
    double exact_v(double x, double t) const { return Tv(t) * V(x); }
    double exact_u_t(double x, double t) const { return dTu(t) * U(x); }
    double exact_v_t(double x, double t) const { return dTv(t) * V(x); }

    /// The cosine/sine pair used for the Dirichlet convergence study
    /// (exponential kernel with sigma = 1).
    static ManufacturedCase cosine_case();
};

/// Source terms bound to one (case, grid, kernel, params) tuple. K U and K V
/// are integrated once per grid node at construction; evaluating the sources
/// at a time t is then a closed-form expression.
class ManufacturedSources {
public:
    ManufacturedSources(ManufacturedCase mc, const Grid& grid, const Kernel& kernel,
                        GrayScottParams params, double quad_tol = 1e-12);

    void eval(double t, Eigen::VectorXd& f_u, Eigen::VectorXd& f_v) const;
    Derivatives eval(double t) const;

    const Eigen::VectorXd& K_U() const { return KU_; }
    const Eigen::VectorXd& K_V() const { return KV_; }
    const ManufacturedCase& mcase() const { return case_; }

    /// Exact solution sampled on the grid.
    SystemState exact_state(double t) const;

private:
    ManufacturedCase case_;
    Grid grid_;
    GrayScottParams params_;
    Eigen::VectorXd xs_, Us_, Vs_, KU_, KV_;
};

/// K f at one point by adaptive quadrature of the operator definition, for a
/// profile f supported on [-L, L] and extended by zero.
double oracle_apply_K(const Kernel& kernel, const std::function<double(double)>& f,
                      double L, double x, double abs_tol = 1e-12);

/// Gray-Scott right-hand side:
///   du/dt = d_u K u + A (1 - u) - u v^2 + f_u
///   dv/dt = d_v K v - B v + u v^2 + f_v
/// The operators realize -K, so their action enters negated.
Derivatives rhs(const SystemState& state, const GrayScottParams& params,
                const DiscreteOperator& op_u, const DiscreteOperator& op_v,
                const ManufacturedSources* sources = nullptr);

/// Same, restricted to rows [row0, row0 + nrows).
Derivatives rhs_rows(const SystemState& state, const GrayScottParams& params,
                     const DiscreteOperator& op_u, const DiscreteOperator& op_v,
                     int row0, int nrows, const ManufacturedSources* sources = nullptr);

/// Pulse initial conditions:
///   u0 = 1 - 0.67 (1/(alpha sqrt(2 pi))) exp(-(x/alpha)^2 / 2)
///   v0 = 0.925 (beta/(alpha 2 sqrt(2) Gamma(1/beta))) exp(-(|x|/alpha)^beta)
SystemState pulse_initial_conditions(const Grid& grid, double alpha = 0.1,
                                     double beta = 3.0);
SystemState pulse_initial_conditions(const Eigen::VectorXd& nodes, double alpha = 0.1,
                                     double beta = 3.0);

/// Determinant of the quasilinear coefficient matrix a(u, v; eps) per node:
///   [[d_u + eps^2 A + eps^2 v^2, 2 eps^2 u v],
///    [-eps^2 v^2,                d_v + eps^2 B - 2 eps^2 u v]]
Eigen::VectorXd quasilinear_det(const SystemState& state, double eps,
                                const GrayScottParams& params);

}  // namespace nlgs
