#pragma once

#include <functional>

namespace nlgs {

struct QuadratureOptions {
    double abs_tol = 1e-12;
    double rel_tol = 0.0;      // 0 disables the relative criterion
    int max_intervals = 50000;
};

/// Adaptive Gauss-Kronrod (G7/K15) integration of f over [a, b].
/// Intervals are bisected until the local error estimate fits within the
/// interval's share of the tolerance. Throws NumericalError if the interval
/// budget is exhausted first.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureOptions& opt = {});

/// Integral of f over the half line [from, +inf), mapped to (0, 1] by the
/// substitution t = 1/(1 + y - from).
double integrate_half_line(const std::function<double(double)>& f, double from,
                           const QuadratureOptions& opt = {});

}  // namespace nlgs
