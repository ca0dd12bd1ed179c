#pragma once

#include <Eigen/Core>
#include <complex>
#include <memory>

#include "nlgs/kernel.hpp"
#include "nlgs/model.hpp"
#include "nlgs/timestepper.hpp"

namespace nlgs {

/// Fourier symbol of K: gamma_hat(xi) - 1 with the convention
/// gamma_hat(xi) = int gamma(z) exp(-i xi z) dz. Closed forms:
///   exponential  sigma^2/(sigma^2 + xi^2) - 1
///   algebraic    (1 + a|xi|) exp(-a|xi|) - 1
/// symbol(0) = 0 and symbol(xi) <= 0 for all xi.
double symbol(const Kernel& kernel, double xi);

enum class SpectralScheme { imex_bdf2, ab2_fourier };

/// Diagonalization of K on a periodic grid of n nodes (n a power of two)
/// over [-L, L), node spacing 2L/n, frequencies xi_k = pi k / L.
class SpectralOperator {
public:
    SpectralOperator(const Kernel& kernel, int n, double L);

    int size() const { return n_; }
    double half_width() const { return L_; }
    Eigen::VectorXd nodes() const;
    /// K_hat(xi_k) in FFT index order (k = 0..n-1, negative frequencies in
    /// the upper half).
    const Eigen::VectorXd& symbol_values() const { return symbol_; }

private:
    int n_;
    double L_;
    Eigen::VectorXd symbol_;
};

/// Periodic Gray-Scott stepper: diffusion handled implicitly in frequency
/// space by BDF2 (bootstrapped with one implicit-Euler step), reaction terms
/// extrapolated explicitly. The ab2_fourier scheme is a fully explicit
/// alternative for sensitivity checks.
class SpectralStepper {
public:
    SpectralStepper(const SpectralOperator& op, GrayScottParams params, double dt,
                    SpectralScheme scheme = SpectralScheme::imex_bdf2);
    ~SpectralStepper();

    SpectralStepper(const SpectralStepper&) = delete;
    SpectralStepper& operator=(const SpectralStepper&) = delete;

    void reset(const SystemState& initial);
    const SystemState& state() const { return state_; }
    /// Advance one step; returns max |W_{n+1} - W_n|.
    double advance();

private:
    struct Fft;

    Derivatives reaction(const SystemState& s) const;

    const SpectralOperator& op_;
    GrayScottParams params_;
    double dt_;
    SpectralScheme scheme_;
    SystemState state_;
    bool bootstrapped_ = false;
    long step_ = 0;

    // frequency-space history
    Eigen::VectorXcd u_hat_, v_hat_, u_hat_prev_, v_hat_prev_;
    Eigen::VectorXcd gu_hat_, gv_hat_, gu_hat_prev_, gv_hat_prev_;
    std::unique_ptr<Fft> fft_;
};

/// March the periodic solver with the same stopping rules as run().
RunResult run_periodic(const SystemState& initial, const StepperConfig& config,
                       const GrayScottParams& params, const SpectralOperator& op,
                       SpectralScheme scheme = SpectralScheme::imex_bdf2,
                       const StepObserver& observer = {});

}  // namespace nlgs
