#include "nlgs/spectral.hpp"

#include <fftw3.h>

#include <cmath>
#include <numbers>

namespace nlgs {

double symbol(const Kernel& kernel, double xi) {
    const double axi = std::abs(xi);
    if (kernel.family() == Kernel::Family::exponential) {
        const double s2 = kernel.shape() * kernel.shape();
        return -xi * xi / (s2 + xi * xi);
    }
    // (1 + a|xi|) exp(-a|xi|) - 1, written to avoid cancellation near 0
    const double x = kernel.shape() * axi;
    return std::expm1(-x) + x * std::exp(-x);
}

SpectralOperator::SpectralOperator(const Kernel& kernel, int n, double L)
    : n_(n), L_(L) {
    if (n < 2 || (n & (n - 1)) != 0)
        throw ConfigError("spectral operator: node count must be a power of two");
    if (!(L > 0.0)) throw ConfigError("spectral operator: L must be positive");
    symbol_.resize(n);
    for (int k = 0; k < n; ++k) {
        const int kk = k <= n / 2 ? k : k - n;
        symbol_[k] = symbol(kernel, std::numbers::pi * kk / L);
    }
}

Eigen::VectorXd SpectralOperator::nodes() const {
    Eigen::VectorXd x(n_);
    const double h = 2.0 * L_ / n_;
    for (int j = 0; j < n_; ++j) x[j] = -L_ + j * h;
    return x;
}

struct SpectralStepper::Fft {
    int n;
    fftw_complex* buf;
    fftw_plan fwd;
    fftw_plan bwd;

    explicit Fft(int n) : n(n) {
        buf = fftw_alloc_complex(static_cast<size_t>(n));
        fwd = fftw_plan_dft_1d(n, buf, buf, FFTW_FORWARD, FFTW_ESTIMATE);
        bwd = fftw_plan_dft_1d(n, buf, buf, FFTW_BACKWARD, FFTW_ESTIMATE);
    }
    ~Fft() {
        fftw_destroy_plan(fwd);
        fftw_destroy_plan(bwd);
        fftw_free(buf);
    }

    Eigen::VectorXcd forward(const Eigen::VectorXd& x) {
        for (int i = 0; i < n; ++i) {
            buf[i][0] = x[i];
            buf[i][1] = 0.0;
        }
        fftw_execute(fwd);
        Eigen::VectorXcd out(n);
        for (int i = 0; i < n; ++i) out[i] = {buf[i][0], buf[i][1]};
        return out;
    }

    /// Inverse transform of a spectrum of real data; checks that the
    /// imaginary residue is at the round-off level before discarding it.
    Eigen::VectorXd inverse_real(const Eigen::VectorXcd& x) {
        for (int i = 0; i < n; ++i) {
            buf[i][0] = x[i].real();
            buf[i][1] = x[i].imag();
        }
        fftw_execute(bwd);
        Eigen::VectorXd out(n);
        double max_re = 0.0, max_im = 0.0;
        for (int i = 0; i < n; ++i) {
            out[i] = buf[i][0] / n;
            max_re = std::max(max_re, std::abs(out[i]));
            max_im = std::max(max_im, std::abs(buf[i][1]) / n);
        }
        if (max_im > 1e-12 * std::max(1.0, max_re))
            throw NumericalError("spectral state has non-negligible imaginary part (" +
                                 std::to_string(max_im) + ")");
        return out;
    }
};

SpectralStepper::SpectralStepper(const SpectralOperator& op, GrayScottParams params,
                                 double dt, SpectralScheme scheme)
    : op_(op), params_(params), dt_(dt), scheme_(scheme),
      fft_(std::make_unique<Fft>(op.size())) {
    params_.validate();
    if (!(dt > 0.0)) throw ConfigError("spectral stepper: dt must be positive");
}

SpectralStepper::~SpectralStepper() = default;

Derivatives SpectralStepper::reaction(const SystemState& s) const {
    const auto u = s.u.array();
    const auto v = s.v.array();
    const auto uvv = u * v * v;
    Derivatives g;
    g.du = (params_.A * (1.0 - u) - uvv).matrix();
    g.dv = (-params_.B * v + uvv).matrix();
    return g;
}

void SpectralStepper::reset(const SystemState& initial) {
    if (initial.u.size() != op_.size() || initial.v.size() != op_.size())
        throw std::invalid_argument("spectral stepper: state size mismatch");
    state_ = initial;
    u_hat_ = fft_->forward(state_.u);
    v_hat_ = fft_->forward(state_.v);
    const Derivatives g = reaction(state_);
    gu_hat_ = fft_->forward(g.du);
    gv_hat_ = fft_->forward(g.dv);
    bootstrapped_ = false;
    step_ = 0;
}

double SpectralStepper::advance() {
    const int n = op_.size();
    const Eigen::ArrayXcd symc =
        op_.symbol_values().array().cast<std::complex<double>>();
    Eigen::VectorXcd u_new(n), v_new(n);

    if (scheme_ == SpectralScheme::imex_bdf2) {
        if (!bootstrapped_) {
            // implicit-Euler bootstrap: (1 - dt d K_hat) W_1 = W_0 + dt G_0
            u_new = ((u_hat_.array() + dt_ * gu_hat_.array()) /
                     (1.0 - dt_ * params_.d_u * symc)).matrix();
            v_new = ((v_hat_.array() + dt_ * gv_hat_.array()) /
                     (1.0 - dt_ * params_.d_v * symc)).matrix();
        } else {
            u_new = ((4.0 * u_hat_.array() - u_hat_prev_.array() +
                      2.0 * dt_ * (2.0 * gu_hat_.array() - gu_hat_prev_.array())) /
                     (3.0 - 2.0 * dt_ * params_.d_u * symc)).matrix();
            v_new = ((4.0 * v_hat_.array() - v_hat_prev_.array() +
                      2.0 * dt_ * (2.0 * gv_hat_.array() - gv_hat_prev_.array())) /
                     (3.0 - 2.0 * dt_ * params_.d_v * symc)).matrix();
        }
    } else {
        // fully explicit AB2 on the whole right-hand side in frequency space
        const auto fu = params_.d_u * symc * u_hat_.array() + gu_hat_.array();
        const auto fv = params_.d_v * symc * v_hat_.array() + gv_hat_.array();
        if (!bootstrapped_) {
            u_new = (u_hat_.array() + dt_ * fu).matrix();
            v_new = (v_hat_.array() + dt_ * fv).matrix();
        } else {
            const auto fu_prev =
                params_.d_u * symc * u_hat_prev_.array() + gu_hat_prev_.array();
            const auto fv_prev =
                params_.d_v * symc * v_hat_prev_.array() + gv_hat_prev_.array();
            u_new = (u_hat_.array() + dt_ * (1.5 * fu - 0.5 * fu_prev)).matrix();
            v_new = (v_hat_.array() + dt_ * (1.5 * fv - 0.5 * fv_prev)).matrix();
        }
    }

    SystemState next;
    next.u = fft_->inverse_real(u_new);
    next.v = fft_->inverse_real(v_new);
    next.t = state_.t + dt_;
    if (!next.u.allFinite() || !next.v.allFinite())
        throw DivergenceError("spectral integration produced non-finite values at step " +
                                  std::to_string(step_ + 1),
                              step_ + 1, next.t);

    const double err = std::max((next.u - state_.u).cwiseAbs().maxCoeff(),
                                (next.v - state_.v).cwiseAbs().maxCoeff());

    const Derivatives g = reaction(next);
    u_hat_prev_ = std::move(u_hat_);
    v_hat_prev_ = std::move(v_hat_);
    gu_hat_prev_ = std::move(gu_hat_);
    gv_hat_prev_ = std::move(gv_hat_);
    u_hat_ = std::move(u_new);
    v_hat_ = std::move(v_new);
    gu_hat_ = fft_->forward(g.du);
    gv_hat_ = fft_->forward(g.dv);

    state_ = std::move(next);
    bootstrapped_ = true;
    ++step_;
    return err;
}

RunResult run_periodic(const SystemState& initial, const StepperConfig& config,
                       const GrayScottParams& params, const SpectralOperator& op,
                       SpectralScheme scheme, const StepObserver& observer) {
    config.validate();
    SpectralStepper stepper(op, params, config.dt, scheme);
    stepper.reset(initial);

    RunResult result;
    result.max_update_history.reserve(static_cast<size_t>(config.nmax));
    result.reason = StopReason::nmax_reached;
    for (long n = 1; n <= config.nmax; ++n) {
        const double err = stepper.advance();
        result.steps = n;
        result.max_update_history.push_back(err);
        if (config.checkpoint_every > 0 && n % config.checkpoint_every == 0)
            result.checkpoints.push_back({n, stepper.state()});
        if (observer) observer(n, stepper.state().t, err, stepper.state());
        if (config.tol >= 0.0 && err < config.tol) {
            result.reason = StopReason::steady;
            break;
        }
    }
    result.final_state = stepper.state();
    return result;
}

}  // namespace nlgs
