#include "nlgs/kernel.hpp"

#include <cmath>
#include <numbers>

#include "nlgs/errors.hpp"

namespace nlgs {
namespace {

// Shared closed forms, usable at double and long double precision.
// All take z >= 0; odd/even extensions happen in the callers.

template <class Real>
Real exp_density(Real s, Real z) {
    return Real(0.5) * s * std::exp(-s * z);
}

template <class Real>
Real exp_F_prime(Real s, Real z) {
    // int_0^z gamma = (1 - exp(-s z))/2
    return Real(-0.5) * std::expm1(-s * z);
}

template <class Real>
Real exp_F(Real s, Real z) {
    // int_0^z F' = z/2 + (exp(-s z) - 1)/(2 s)
    return Real(0.5) * z + std::expm1(-s * z) / (Real(2) * s);
}

template <class Real>
Real exp_f1(Real s, Real z) {
    // int_0^z y^2 gamma = 1/s^2 - exp(-s z)(z^2/2 + z/s + 1/s^2)
    const Real inv2 = Real(1) / (s * s);
    return inv2 - std::exp(-s * z) * (Real(0.5) * z * z + z / s + inv2);
}

template <class Real>
Real alg_density(Real a, Real z) {
    const Real d = z * z + a * a;
    return Real(2) * a * a * a / (std::numbers::pi_v<Real> * d * d);
}

template <class Real>
Real alg_F_prime(Real a, Real z) {
    return (a * z / (z * z + a * a) + std::atan(z / a)) / std::numbers::pi_v<Real>;
}

template <class Real>
Real alg_F(Real a, Real z) {
    return z * std::atan(z / a) / std::numbers::pi_v<Real>;
}

template <class Real>
Real alg_f1(Real a, Real z) {
    return (a * a * std::atan(z / a) - a * a * a * z / (z * z + a * a)) / std::numbers::pi_v<Real>;
}

}  // namespace

Kernel::Kernel(Family family, double shape) : family_(family), shape_(shape) {
    if (!(shape > 0.0))
        throw ConfigError("kernel shape parameter must be positive, got " +
                          std::to_string(shape));
}

Kernel Kernel::exponential(double sigma) { return Kernel(Family::exponential, sigma); }
Kernel Kernel::algebraic(double a) { return Kernel(Family::algebraic, a); }

std::string Kernel::describe() const {
    return family_ == Family::exponential ? "exponential(sigma=" + std::to_string(shape_) + ")"
                                          : "algebraic(a=" + std::to_string(shape_) + ")";
}

double Kernel::density(double z) const {
    const double az = std::abs(z);
    return family_ == Family::exponential ? exp_density(shape_, az)
                                          : alg_density(shape_, az);
}

KernelPrimitives Kernel::antiderivatives(double z) const {
    const double az = std::abs(z);
    const double sgn = z < 0.0 ? -1.0 : 1.0;
    if (family_ == Family::exponential)
        return {exp_F(shape_, az), sgn * exp_F_prime(shape_, az)};
    return {alg_F(shape_, az), sgn * alg_F_prime(shape_, az)};
}

double Kernel::f1(double h) const {
    if (h < 0.0) throw std::invalid_argument("f1: h must be non-negative");
    return family_ == Family::exponential ? exp_f1(shape_, h) : alg_f1(shape_, h);
}

double Kernel::tail_mass(double R) const {
    if (R < 0.0) throw std::invalid_argument("tail_mass: R must be non-negative");
    if (family_ == Family::exponential) return std::exp(-shape_ * R);
    // 1 - 2 F'(R), written via atan2 to stay accurate for large R
    const double a = shape_;
    return 2.0 * (std::atan2(a, R) - a * R / (R * R + a * a)) / std::numbers::pi;
}

double Kernel::second_moment() const {
    return family_ == Family::exponential ? 2.0 / (shape_ * shape_) : shape_ * shape_;
}

double Kernel::tail_integral_against(double x, double R,
                                     const std::function<double(double)>& g,
                                     ExteriorSide side, double abs_tol) const {
    if (!(R > 0.0)) throw std::invalid_argument("tail_integral_against: R must be positive");
    QuadratureOptions opt;
    opt.abs_tol = abs_tol;
    if (side == ExteriorSide::left) {
        // int_{y > R} g(x - y) gamma(y) dy
        return integrate_half_line([&](double y) { return g(x - y) * density(y); }, R, opt);
    }
    // int_{y < -R} g(x - y) gamma(y) dy == int_{y > R} g(x + y) gamma(y) dy
    return integrate_half_line([&](double y) { return g(x + y) * density(y); }, R, opt);
}

long double Kernel::density_xp(long double z) const {
    const long double az = std::abs(z);
    const long double s = static_cast<long double>(shape_);
    return family_ == Family::exponential ? exp_density(s, az) : alg_density(s, az);
}

long double Kernel::F_xp(long double z) const {
    const long double az = std::abs(z);
    const long double s = static_cast<long double>(shape_);
    return family_ == Family::exponential ? exp_F(s, az) : alg_F(s, az);
}

long double Kernel::F_prime_xp(long double z) const {
    const long double az = std::abs(z);
    const long double sgn = z < 0.0L ? -1.0L : 1.0L;
    const long double s = static_cast<long double>(shape_);
    return sgn * (family_ == Family::exponential ? exp_F_prime(s, az) : alg_F_prime(s, az));
}

long double Kernel::f1_xp(long double h) const {
    if (h < 0.0L) throw std::invalid_argument("f1: h must be non-negative");
    const long double s = static_cast<long double>(shape_);
    return family_ == Family::exponential ? exp_f1(s, h) : alg_f1(s, h);
}

}  // namespace nlgs
