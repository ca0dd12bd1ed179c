#include "nlgs/integrate.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "nlgs/errors.hpp"

namespace nlgs {
namespace {

// 15-point Kronrod nodes on [0, 1] with the embedded 7-point Gauss rule.
// Even-indexed abscissae carry Gauss weights.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct PanelResult {
    double value;
    double error;
};

PanelResult kronrod15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    const double fc = f(c);
    double gauss = fc * kWg[3];
    double kron = fc * kWgk[7];
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kXgk[i];
        const double fsum = f(c - dx) + f(c + dx);
        kron += fsum * kWgk[i];
        if (i % 2 == 1) gauss += fsum * kWg[i / 2];
    }
    kron *= half;
    gauss *= half;

    // quadpack-style error sharpening
    double err = std::abs(kron - gauss);
    err = 200.0 * err * std::min(1.0, std::sqrt(200.0 * err));
    return {kron, err};
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureOptions& opt) {
    if (a == b) return 0.0;
    double sign = 1.0;
    if (a > b) {
        std::swap(a, b);
        sign = -1.0;
    }

    struct Interval {
        double a, b, value, error;
    };
    std::vector<Interval> stack;
    const PanelResult first = kronrod15(f, a, b);
    stack.push_back({a, b, first.value, first.error});

    const double total_len = b - a;
    double sum = 0.0;
    double rough_total = std::abs(first.value);
    int used = 1;

    while (!stack.empty()) {
        const Interval iv = stack.back();
        stack.pop_back();

        const double share = (iv.b - iv.a) / total_len;
        double allowed = opt.abs_tol * share;
        if (opt.rel_tol > 0.0)
            allowed = std::max(allowed, opt.rel_tol * rough_total * share);
        if (iv.error <= allowed || iv.b - iv.a < 1e-15 * total_len) {
            sum += iv.value;
            continue;
        }
        if (used + 2 > opt.max_intervals)
            throw NumericalError("adaptive quadrature did not converge within interval budget");

        const double mid = 0.5 * (iv.a + iv.b);
        const PanelResult left = kronrod15(f, iv.a, mid);
        const PanelResult right = kronrod15(f, mid, iv.b);
        rough_total += std::abs(left.value) + std::abs(right.value) - std::abs(iv.value);
        stack.push_back({iv.a, mid, left.value, left.error});
        stack.push_back({mid, iv.b, right.value, right.error});
        used += 2;
    }
    return sign * sum;
}

double integrate_half_line(const std::function<double(double)>& f, double from,
                           const QuadratureOptions& opt) {
    // y = from + (1 - t)/t, dy = -dt/t^2; t in (0, 1]
    auto mapped = [&](double t) {
        const double y = from + (1.0 - t) / t;
        const double fy = f(y);
        return fy / (t * t);
    };
    return integrate(mapped, 0.0, 1.0, opt);
}

}  // namespace nlgs
