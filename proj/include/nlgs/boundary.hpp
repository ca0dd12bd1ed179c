#pragma once

#include <functional>
#include <optional>
#include <variant>

#include "nlgs/errors.hpp"

namespace nlgs {

/// Exterior data is prescribed on |x| > L.
struct Dirichlet {
    std::function<double(double)> g;
    // set when g is constant; keeps tail terms in closed form
    std::optional<double> constant_value;

    static Dirichlet constant(double value) {
        return Dirichlet{[value](double) { return value; }, value};
    }
    static Dirichlet function(std::function<double(double)> g) {
        return Dirichlet{std::move(g), std::nullopt};
    }
};

/// Only the algebraic decay rate is prescribed outside the domain; the
/// boundary amplitude is determined by the solve. The decaying quantity is
/// u - far_field, extended as u(x) = far_field + (L/|x|)^q (u(+-L) - far_field).
struct Free {
    double decay_exponent = 2.0;  // q
    double far_field = 0.0;       // u_ref
};

/// Zero nonlocal flux on the outer collar [-L, -l] U [l, L] with l = L/2;
/// free-type decay beyond the computational domain.
struct Neumann {
    double inner_half_width = 0.0;  // l; computational half width is L = 2 l
    double decay_exponent = 2.0;
    double far_field = 0.0;
};

struct BoundaryConstraint {
    std::variant<Dirichlet, Free, Neumann> value;

    bool is_dirichlet() const { return std::holds_alternative<Dirichlet>(value); }
    bool is_free() const { return std::holds_alternative<Free>(value); }
    bool is_neumann() const { return std::holds_alternative<Neumann>(value); }
    const Dirichlet& dirichlet() const { return std::get<Dirichlet>(value); }
    const Free& free() const { return std::get<Free>(value); }
    const Neumann& neumann() const { return std::get<Neumann>(value); }

    /// Decay exponent of the free/Neumann exterior profile.
    double decay_exponent() const;
    /// Far-field offset of the free/Neumann extension.
    double far_field() const;
};

/// Value of the unknown at an exterior point |x| > L, given the boundary
/// values u(-L) and u(+L). Dirichlet returns g(x); free and Neumann return
/// far_field + (g(x)/g(sign(x) L)) (u_boundary - far_field) with g = |L|^q/|x|^q.
double exterior_value(const BoundaryConstraint& bc, double L, double x,
                      double u_left, double u_right);

}  // namespace nlgs
