#include "nlgs/model.hpp"

#include <cmath>
#include <numbers>

#include "nlgs/integrate.hpp"

namespace nlgs {

ManufacturedCase ManufacturedCase::cosine_case() {
    ManufacturedCase mc;
    mc.U = [](double x) {
        return 0.5 * (1.0 + std::sin(std::numbers::pi * (x - 0.5))) * (1.0 - x * x) *
               std::exp(1.0 - x * x);
    };
    mc.V = [](double x) {
        return std::cos(std::numbers::pi * x / 2.0) * x * x * x *
               std::sin(std::numbers::pi * x);
    };
    mc.Tu = [](double t) { return std::cos(t); };
    mc.dTu = [](double t) { return -std::sin(t); };
    mc.Tv = [](double t) { return std::cos(t * t); };
    mc.dTv = [](double t) { return -2.0 * t * std::sin(t * t); };
    return mc;
}

double oracle_apply_K(const Kernel& kernel, const std::function<double(double)>& f,
                      double L, double x, double abs_tol) {
    // K f (x) = int_{-L}^{L} f(s) gamma(x - s) ds - f(x), zero exterior data.
    // Split at s = x where the kernel has a kink.
    QuadratureOptions opt;
    opt.abs_tol = abs_tol;
    auto integrand = [&](double s) { return f(s) * kernel.density(x - s); };
    double conv = 0.0;
    if (x > -L && x < L) {
        conv = integrate(integrand, -L, x, opt) + integrate(integrand, x, L, opt);
    } else {
        conv = integrate(integrand, -L, L, opt);
    }
    return conv - f(x);
}

ManufacturedSources::ManufacturedSources(ManufacturedCase mc, const Grid& grid,
                                         const Kernel& kernel, GrayScottParams params,
                                         double quad_tol)
    : case_(std::move(mc)), grid_(grid), params_(params) {
    const int N = grid.node_count();
    xs_ = grid.nodes();
    Us_.resize(N);
    Vs_.resize(N);
    KU_.resize(N);
    KV_.resize(N);
    for (int i = 0; i < N; ++i) {
        Us_[i] = case_.U(xs_[i]);
        Vs_[i] = case_.V(xs_[i]);
        KU_[i] = oracle_apply_K(kernel, case_.U, grid.L, xs_[i], quad_tol);
        KV_[i] = oracle_apply_K(kernel, case_.V, grid.L, xs_[i], quad_tol);
    }
}

void ManufacturedSources::eval(double t, Eigen::VectorXd& f_u, Eigen::VectorXd& f_v) const {
    const double tu = case_.Tu(t), tv = case_.Tv(t);
    const double dtu = case_.dTu(t), dtv = case_.dTv(t);
    const auto u = tu * Us_.array();
    const auto v = tv * Vs_.array();
    const auto uvv = u * v * v;
    f_u = (dtu * Us_.array() - params_.d_u * tu * KU_.array() -
           params_.A * (1.0 - u) + uvv).matrix();
    f_v = (dtv * Vs_.array() - params_.d_v * tv * KV_.array() +
           params_.B * v - uvv).matrix();
}

Derivatives ManufacturedSources::eval(double t) const {
    Derivatives d;
    eval(t, d.du, d.dv);
    return d;
}

SystemState ManufacturedSources::exact_state(double t) const {
    SystemState s;
    s.u = case_.Tu(t) * Us_;
    s.v = case_.Tv(t) * Vs_;
    s.t = t;
    return s;
}

Derivatives rhs(const SystemState& state, const GrayScottParams& params,
                const DiscreteOperator& op_u, const DiscreteOperator& op_v,
                const ManufacturedSources* sources) {
    return rhs_rows(state, params, op_u, op_v, 0,
                    op_u.grid().node_count(), sources);
}

Derivatives rhs_rows(const SystemState& state, const GrayScottParams& params,
                     const DiscreteOperator& op_u, const DiscreteOperator& op_v,
                     int row0, int nrows, const ManufacturedSources* sources) {
    const int N = op_u.grid().node_count();
    if (state.u.size() != N || state.v.size() != N)
        throw std::invalid_argument("rhs: state size does not match operator grid");
    if (op_v.grid().node_count() != N)
        throw std::invalid_argument("rhs: u and v operators use different grids");

    // apply() realizes -K, hence the minus signs in front
    const Eigen::VectorXd minusKu = op_u.apply_rows(state.u, row0, nrows);
    const Eigen::VectorXd minusKv = op_v.apply_rows(state.v, row0, nrows);

    const auto u = state.u.segment(row0, nrows).array();
    const auto v = state.v.segment(row0, nrows).array();
    const auto uvv = u * v * v;

    Derivatives out;
    out.du = (-params.d_u * minusKu.array() + params.A * (1.0 - u) - uvv).matrix();
    out.dv = (-params.d_v * minusKv.array() - params.B * v + uvv).matrix();
    if (sources) {
        Eigen::VectorXd fu, fv;
        sources->eval(state.t, fu, fv);
        out.du += fu.segment(row0, nrows);
        out.dv += fv.segment(row0, nrows);
    }
    return out;
}

SystemState pulse_initial_conditions(const Grid& grid, double alpha, double beta) {
    return pulse_initial_conditions(grid.nodes(), alpha, beta);
}

SystemState pulse_initial_conditions(const Eigen::VectorXd& nodes, double alpha,
                                     double beta) {
    if (!(alpha > 0.0 && beta > 0.0))
        throw std::invalid_argument("pulse initial conditions need alpha, beta > 0");

    const double cu = 0.67 / (alpha * std::sqrt(2.0 * std::numbers::pi));
    const double cv = 0.925 * beta /
                      (alpha * 2.0 * std::sqrt(2.0) * std::tgamma(1.0 / beta));

    SystemState s;
    const int N = static_cast<int>(nodes.size());
    s.u.resize(N);
    s.v.resize(N);
    for (int i = 0; i < N; ++i) {
        const double r = std::abs(nodes[i]) / alpha;
        s.u[i] = 1.0 - cu * std::exp(-0.5 * r * r);
        s.v[i] = cv * std::exp(-std::pow(r, beta));
    }
    s.t = 0.0;
    return s;
}

Eigen::VectorXd quasilinear_det(const SystemState& state, double eps,
                                const GrayScottParams& params) {
    const double e2 = eps * eps;
    const auto u = state.u.array();
    const auto v = state.v.array();
    const auto a11 = params.d_u + e2 * params.A + e2 * v * v;
    const auto a22 = params.d_v + e2 * params.B - 2.0 * e2 * u * v;
    const auto a12 = 2.0 * e2 * u * v;
    const auto a21 = -e2 * v * v;
    return (a11 * a22 - a12 * a21).matrix();
}

}  // namespace nlgs
