#pragma once

#include <functional>
#include <string>

#include "nlgs/integrate.hpp"

namespace nlgs {

/// Which exterior half line a tail integral samples from.
enum class ExteriorSide { left, right };

struct KernelPrimitives {
    double F;        // second antiderivative, F'' = gamma
    double F_prime;  // first antiderivative of gamma
};

/// Convolution kernel of the nonlocal diffusion operator.
///
/// Two families are supported, both positive, even and of unit mass:
///   exponential  gamma(z) = (sigma/2) exp(-sigma |z|)
///   algebraic    gamma(z) = 2 a^3 / (pi (z^2 + a^2)^2)
///
/// Every quantity the quadrature scheme needs (density, antiderivatives,
/// f1, tail mass) is available in closed form. Antiderivatives follow the
/// convention F'(z) = int_0^z gamma, F(z) = int_0^z F', which makes F' odd
/// and F even; quadrature weights are invariant under affine shifts of F.
class Kernel {
public:
    enum class Family { exponential, algebraic };

    static Kernel exponential(double sigma);
    static Kernel algebraic(double a);

    Family family() const { return family_; }
    /// sigma for the exponential family, a for the algebraic one.
    double shape() const { return shape_; }
    std::string describe() const;

    /// gamma(|z|)
    double density(double z) const;

    /// (F(z), F'(z))
    KernelPrimitives antiderivatives(double z) const;

    /// int_0^h y^2 gamma(y) dy; requires h >= 0.
    double f1(double h) const;

    /// int_{|y| > R} gamma(y) dy; requires R >= 0. tail_mass(0) = 1.
    double tail_mass(double R) const;

    /// int_R^infty z^2 gamma(z) dz ... twice, i.e. the full second moment.
    double second_moment() const;

    /// Tail integral against exterior data g:
    ///   side = left:   int_{y > R} g(x - y) gamma(y) dy   (samples x - y < x - R)
    ///   side = right:  int_{y < -R} g(x - y) gamma(y) dy  (samples x - y > x + R)
    /// Evaluated by adaptive quadrature; requires R > 0.
    double tail_integral_against(double x, double R,
                                 const std::function<double(double)>& g,
                                 ExteriorSide side, double abs_tol = 1e-12) const;

    // Extended-precision primitives. The quadrature weights are second
    // differences of F; computing them in long double keeps them accurate
    // relative to their own (possibly tiny) magnitude.
    long double density_xp(long double z) const;
    long double F_xp(long double z) const;
    long double F_prime_xp(long double z) const;
    long double f1_xp(long double h) const;

private:
    Kernel(Family family, double shape);

    Family family_;
    double shape_;
};

}  // namespace nlgs
