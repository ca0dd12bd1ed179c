#include "nlgs/analysis.hpp"

#include <cmath>

#include "nlgs/errors.hpp"

namespace nlgs {

namespace {

double lp_accumulate(const Eigen::VectorXd& diff, int p, double h) {
    if (p != 1 && p != 2) throw std::invalid_argument("lp_error: p must be 1 or 2");
    const int n = static_cast<int>(diff.size());
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        const double w = (i == 0 || i == n - 1) ? 0.5 * h : h;
        const double a = std::abs(diff[i]);
        sum += w * (p == 1 ? a : a * a);
    }
    return p == 1 ? sum : std::sqrt(sum);
}

}  // namespace

double lp_error(const Eigen::VectorXd& u, const Eigen::VectorXd& ref, int p, double h) {
    if (u.size() != ref.size())
        throw std::invalid_argument("lp_error: length mismatch");
    return lp_accumulate(u - ref, p, h);
}

double lp_error(const Eigen::VectorXd& u, const std::function<double(double)>& ref,
                int p, const Grid& grid) {
    if (u.size() != grid.node_count())
        throw std::invalid_argument("lp_error: length does not match grid");
    Eigen::VectorXd diff(u.size());
    for (int i = 0; i < grid.node_count(); ++i) diff[i] = u[i] - ref(grid.node(i));
    return lp_accumulate(diff, p, grid.h);
}

std::optional<double> observed_order(double e_coarse, double e_fine, double h_coarse,
                                     double h_fine) {
    if (!(h_fine < h_coarse) || !(h_fine > 0.0))
        throw std::invalid_argument("observed_order: need 0 < h_fine < h_coarse");
    if (e_coarse <= 0.0 || e_fine <= 0.0) return std::nullopt;
    return std::log(e_fine / e_coarse) / std::log(h_fine / h_coarse);
}

Eigen::VectorXd restrict_to_coarse(const Eigen::VectorXd& fine, const Grid& fine_grid,
                                   const Grid& coarse_grid) {
    if (std::abs(fine_grid.L - coarse_grid.L) > 1e-12 * coarse_grid.L)
        throw std::invalid_argument("restrict_to_coarse: grids cover different domains");
    if (fine_grid.M % coarse_grid.M != 0)
        throw std::invalid_argument("restrict_to_coarse: grids are not nested");
    if (fine.size() != fine_grid.node_count())
        throw std::invalid_argument("restrict_to_coarse: length mismatch");
    const int stride = fine_grid.M / coarse_grid.M;
    Eigen::VectorXd out(coarse_grid.node_count());
    for (int i = 0; i <= coarse_grid.M; ++i) out[i] = fine[i * stride];
    return out;
}

ProfileMetrics profile_metrics(const Eigen::VectorXd& v, const Grid& grid,
                               double level_fraction) {
    return profile_metrics(v, grid.nodes(), level_fraction);
}

ProfileMetrics profile_metrics(const Eigen::VectorXd& v, const Eigen::VectorXd& x,
                               double level_fraction) {
    if (v.size() != x.size() || v.size() < 2)
        throw std::invalid_argument("profile_metrics: node/value size mismatch");
    if (!v.allFinite()) throw NumericalError("profile_metrics: non-finite profile");
    const double h = x[1] - x[0];

    ProfileMetrics m;
    int imax = 0;
    m.max_value = v.maxCoeff(&imax);
    m.max_location = x[imax];
    m.boundary_value = v[v.size() - 1];
    if (m.max_value == 0.0 && v.minCoeff() == 0.0)
        throw NumericalError("profile_metrics: degenerate all-zero profile");

    const double level = level_fraction * m.max_value;
    const int n = static_cast<int>(v.size());

    // measure of the level set, linear interpolation across crossings
    double width = 0.0;
    for (int i = 0; i + 1 < n; ++i) {
        const bool a = v[i] >= level, b = v[i + 1] >= level;
        if (a && b) {
            width += h;
        } else if (a != b) {
            const double frac = (level - v[i]) / (v[i + 1] - v[i]);
            width += a ? h * frac : h * (1.0 - frac);
        }
    }
    m.plateau_width = width;

    // first and last node in the level set
    int first = -1, last = -1;
    for (int i = 0; i < n; ++i) {
        if (v[i] >= level) {
            if (first < 0) first = i;
            last = i;
        }
    }

    // strict sign changes of the discrete derivative across the span,
    // flat stretches (below a small relative threshold) are skipped
    int changes = 0;
    if (first >= 0 && last > first) {
        const double span_scale =
            v.segment(first, last - first + 1).cwiseAbs().maxCoeff();
        const double tol = 1e-8 * std::max(span_scale, 1e-300);
        int prev_sign = 0;
        for (int i = first; i < last; ++i) {
            const double d = v[i + 1] - v[i];
            if (std::abs(d) <= tol) continue;
            const int sign = d > 0.0 ? 1 : -1;
            if (prev_sign != 0 && sign != prev_sign) ++changes;
            prev_sign = sign;
        }
    }
    m.oscillation_count = changes;
    return m;
}

void ConvergenceReport::compute_orders() {
    for (size_t i = 1; i < rows.size(); ++i) {
        rows[i].order_u = observed_order(rows[i - 1].error_u, rows[i].error_u,
                                         rows[i - 1].h, rows[i].h);
        rows[i].order_v = observed_order(rows[i - 1].error_v, rows[i].error_v,
                                         rows[i - 1].h, rows[i].h);
    }
}

namespace {
double average_of(const std::vector<ConvergenceRow>& rows, bool u_side) {
    double sum = 0.0;
    int count = 0;
    for (const auto& r : rows) {
        const auto& o = u_side ? r.order_u : r.order_v;
        if (o) {
            sum += *o;
            ++count;
        }
    }
    if (count == 0) throw NumericalError("convergence report has no defined orders");
    return sum / count;
}
}  // namespace

double ConvergenceReport::average_order_u() const { return average_of(rows, true); }
double ConvergenceReport::average_order_v() const { return average_of(rows, false); }

}  // namespace nlgs
