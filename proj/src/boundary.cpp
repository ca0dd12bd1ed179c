#include "nlgs/boundary.hpp"

#include <cmath>

namespace nlgs {

double BoundaryConstraint::decay_exponent() const {
    if (is_free()) return free().decay_exponent;
    if (is_neumann()) return neumann().decay_exponent;
    throw ConfigError("decay exponent is only defined for free/Neumann constraints");
}

double BoundaryConstraint::far_field() const {
    if (is_free()) return free().far_field;
    if (is_neumann()) return neumann().far_field;
    throw ConfigError("far-field offset is only defined for free/Neumann constraints");
}

double exterior_value(const BoundaryConstraint& bc, double L, double x,
                      double u_left, double u_right) {
    if (std::abs(x) <= L)
        throw std::invalid_argument("exterior_value: point is not exterior");
    if (bc.is_dirichlet()) return bc.dirichlet().g(x);

    const double q = bc.decay_exponent();
    const double u_ref = bc.far_field();
    const double ratio = std::pow(L / std::abs(x), q);  // g(x)/g(sign(x) L)
    const double u_boundary = x < 0.0 ? u_left : u_right;
    return u_ref + ratio * (u_boundary - u_ref);
}

}  // namespace nlgs
