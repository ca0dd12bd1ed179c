#pragma once

#include <Eigen/Core>

#include "nlgs/errors.hpp"

namespace nlgs {

/// Uniform symmetric mesh on [-L, L]: nodes x_i = i h for i = -M/2 .. M/2,
/// so N = M + 1 nodes and L = (M/2) h exactly.
struct Grid {
    int M = 0;
    double h = 0.0;
    double L = 0.0;

    static Grid from_half_width(double L, int M) {
        if (M < 2 || M % 2 != 0) throw ConfigError("grid: M must be even and >= 2");
        if (!(L > 0.0)) throw ConfigError("grid: L must be positive");
        return Grid{M, 2.0 * L / M, L};
    }

    static Grid from_mesh(double h, int M) {
        if (M < 2 || M % 2 != 0) throw ConfigError("grid: M must be even and >= 2");
        if (!(h > 0.0)) throw ConfigError("grid: h must be positive");
        return Grid{M, h, (M / 2) * h};
    }

    int node_count() const { return M + 1; }

    /// Node position by array index 0..M (grid index i - M/2).
    double node(int array_index) const { return (array_index - M / 2) * h; }

    Eigen::VectorXd nodes() const {
        Eigen::VectorXd x(node_count());
        for (int i = 0; i <= M; ++i) x[i] = node(i);
        return x;
    }
};

}  // namespace nlgs
