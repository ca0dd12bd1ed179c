#include "nlgs/quadrature.hpp"

#include <cmath>

namespace nlgs {

double tent(double t, double h) {
    if (!(h > 0.0)) throw std::invalid_argument("tent: h must be positive");
    return std::max(0.0, 1.0 - std::abs(t) / h);
}

double WeightSet::sum() const {
    double s = 0.0;
    for (double v : w) s += v;
    return s;
}

WeightSet compute_weights(const Kernel& kernel, const Grid& grid) {
    const int M = grid.M;
    if (M < 2) throw ConfigError("compute_weights: M must be at least 2");

    const long double h = static_cast<long double>(grid.h);
    auto x = [&](int j) { return j * h; };

    WeightSet ws;
    ws.M = M;
    ws.f1 = static_cast<double>(kernel.f1_xp(h));
    ws.w.assign(2 * M + 1, 0.0);

    for (int j = 1; j <= M; ++j) {
        long double wj;
        if (j == 1) {
            wj = kernel.f1_xp(h) - kernel.F_prime_xp(x(1)) +
                 (kernel.F_xp(x(2)) - kernel.F_xp(x(1))) / h;
        } else if (j == M) {
            wj = kernel.F_prime_xp(x(M)) +
                 (kernel.F_xp(x(M - 1)) - kernel.F_xp(x(M))) / h;
        } else {
            wj = (kernel.F_xp(x(j + 1)) - 2.0L * kernel.F_xp(x(j)) +
                  kernel.F_xp(x(j - 1))) / h;
        }
        const double w = static_cast<double>(wj);
        ws.w[M + j] = w;
        ws.w[M - j] = w;
    }
    return ws;
}

namespace {

// Decay profile of the free/Neumann exterior extension, normalized to 1 at
// the boundary: (L/|x|)^q.
double decay_ratio(double L, double q, double x) {
    return std::pow(L / std::abs(x), q);
}

}  // namespace

DiscreteOperator::DiscreteOperator(const Kernel& kernel, Grid grid,
                                   BoundaryConstraint bc, double tail_tol)
    : kernel_(kernel), grid_(std::move(grid)), bc_(std::move(bc)) {
    const int M = grid_.M;
    const int N = grid_.node_count();
    const double h = grid_.h;
    const double L = grid_.L;
    const double LW = 2.0 * L;

    if (bc_.is_neumann()) {
        const double ell = bc_.neumann().inner_half_width;
        if (std::abs(2.0 * ell - L) > 1e-12 * L)
            throw ConfigError("Neumann constraint requires computational L = 2 l");
        if (M % 4 != 0)
            throw ConfigError("Neumann constraint requires M divisible by 4");
    }

    weights_ = compute_weights(kernel_, grid_);
    C_ = kernel_.tail_mass(LW);

    A_.setZero(N, N);
    b_.setZero(N);
    c_left_.setZero(N);
    c_right_.setZero(N);

    const double weight_sum = weights_.sum();
    const bool dirichlet = bc_.is_dirichlet();
    const double q = dirichlet ? 0.0 : bc_.decay_exponent();
    const double u_ref = dirichlet ? 0.0 : bc_.far_field();

    for (int row = 0; row < N; ++row) {
        const int gi = row - M / 2;
        A_(row, row) += weight_sum + C_;

        for (int j = -M; j <= M; ++j) {
            if (j == 0) continue;
            const double wj = weights_.at(j);
            const int k = gi - j;  // grid index of the sampled point
            if (std::abs(k) <= M / 2) {
                A_(row, k + M / 2) -= wj;
                continue;
            }
            const double xk = k * h;
            if (dirichlet) {
                const double gk = bc_.dirichlet().g(xk);
                if (!std::isfinite(gk))
                    throw ConfigError("Dirichlet exterior data undefined at x = " +
                                      std::to_string(xk));
                b_[row] -= wj * gk;
            } else {
                const double r = decay_ratio(L, q, xk);
                if (!std::isfinite(r))
                    throw ConfigError("exterior decay profile undefined at x = " +
                                      std::to_string(xk));
                b_[row] -= wj * u_ref * (1.0 - r);
                (xk < 0.0 ? c_left_ : c_right_)[row] -= wj * r;
            }
        }
    }

    // Tail terms beyond the window: C u_i - D_i with D_i the exterior sample
    // integral. The minus sign on D_i makes the operator annihilate constants
    // when the exterior data matches the interior state.
    if (dirichlet) {
        if (bc_.dirichlet().constant_value) {
            const double kappa = *bc_.dirichlet().constant_value;
            b_.array() -= kappa * C_;
        } else {
            for (int row = 0; row < N; ++row) {
                const double xi = grid_.node(row);
                const double d_left = kernel_.tail_integral_against(
                    xi, LW, bc_.dirichlet().g, ExteriorSide::left, tail_tol);
                const double d_right = kernel_.tail_integral_against(
                    xi, LW, bc_.dirichlet().g, ExteriorSide::right, tail_tol);
                b_[row] -= d_left + d_right;
            }
        }
    } else {
        auto profile = [&](double x) { return decay_ratio(L, q, x); };
        for (int row = 0; row < N; ++row) {
            const double xi = grid_.node(row);
            const double g_left = kernel_.tail_integral_against(
                xi, LW, profile, ExteriorSide::left, tail_tol);
            const double g_right = kernel_.tail_integral_against(
                xi, LW, profile, ExteriorSide::right, tail_tol);
            c_left_[row] -= g_left;
            c_right_[row] -= g_right;
            b_[row] -= u_ref * (C_ - g_left - g_right);
        }
    }
}

Eigen::VectorXd DiscreteOperator::apply(const Eigen::VectorXd& u) const {
    const int N = grid_.node_count();
    if (u.size() != N)
        throw std::invalid_argument("apply: expected " + std::to_string(N) +
                                    " values, got " + std::to_string(u.size()));
    Eigen::VectorXd out = A_ * u;
    out += c_left_ * u[0] + c_right_ * u[N - 1] + b_;
    return out;
}

Eigen::VectorXd DiscreteOperator::apply_rows(const Eigen::VectorXd& u, int row0,
                                             int nrows) const {
    const int N = grid_.node_count();
    if (u.size() != N)
        throw std::invalid_argument("apply_rows: length mismatch");
    Eigen::VectorXd out = A_.middleRows(row0, nrows) * u;
    out += c_left_.segment(row0, nrows) * u[0] +
           c_right_.segment(row0, nrows) * u[N - 1] + b_.segment(row0, nrows);
    return out;
}

Eigen::MatrixXd DiscreteOperator::full_linear_matrix() const {
    Eigen::MatrixXd full = A_;
    full.col(0) += c_left_;
    full.col(full.cols() - 1) += c_right_;
    return full;
}

DiscreteOperator assemble(const Kernel& kernel, const Grid& grid,
                          const BoundaryConstraint& bc, double tail_tol) {
    return DiscreteOperator(kernel, grid, bc, tail_tol);
}

}  // namespace nlgs
