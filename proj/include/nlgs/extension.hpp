#pragma once

#include <Eigen/Core>
#include <Eigen/LU>

#include "nlgs/quadrature.hpp"

namespace nlgs {

/// Extension solve for the Neumann constraint: given values on the inner
/// domain [-l, l] (l = L/2), recover the outer-collar values so that the
/// discrete K vanishes at every outer node. The outer-block matrix is
/// factorized once and reused for every solve.
class NeumannExtension {
public:
    explicit NeumannExtension(const DiscreteOperator& op);

    /// Number of nodes in [-l, l] and the array index of the first one.
    int inner_count() const { return inner_count_; }
    int inner_begin() const { return inner_begin_; }
    int outer_count() const { return 2 * inner_begin_; }

    /// Extend inner values (length inner_count()) to the full grid.
    Eigen::VectorXd extend(const Eigen::VectorXd& inner) const;

    /// Convenience overload: reads the inner segment of a full-grid vector
    /// and rewrites its outer segments in place.
    void extend_in_place(Eigen::VectorXd& full) const;

    /// max |(-K u)_i| over the outer nodes for an extended vector.
    double residual_norm(const Eigen::VectorXd& full) const;

private:
    int n_ = 0;            // total nodes
    int inner_begin_ = 0;  // first inner array index
    int inner_count_ = 0;
    Eigen::MatrixXd outer_inner_;            // K rows at outer nodes, inner columns
    Eigen::VectorXd outer_affine_;           // affine part at outer nodes
    Eigen::MatrixXd outer_outer_;            // kept for residual checks
    Eigen::PartialPivLU<Eigen::MatrixXd> lu_;
};

}  // namespace nlgs
