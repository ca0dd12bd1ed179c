#include "nlgs/extension.hpp"

#include <cmath>

namespace nlgs {

namespace {

// Outer nodes are the first and last quarters of the grid.
std::vector<int> outer_indices(int M) {
    std::vector<int> idx;
    idx.reserve(M / 2);
    for (int i = 0; i < M / 4; ++i) idx.push_back(i);
    for (int i = 3 * M / 4 + 1; i <= M; ++i) idx.push_back(i);
    return idx;
}

}  // namespace

NeumannExtension::NeumannExtension(const DiscreteOperator& op) {
    const Grid& grid = op.grid();
    const int M = grid.M;
    if (M % 4 != 0)
        throw ConfigError("Neumann extension requires M divisible by 4");
    if (op.constraint().is_dirichlet())
        throw ConfigError("Neumann extension needs a free/Neumann assembled operator");

    n_ = grid.node_count();
    inner_begin_ = M / 4;
    inner_count_ = M / 2 + 1;

    const Eigen::MatrixXd full = op.full_linear_matrix();
    const std::vector<int> outer = outer_indices(M);
    const int no = static_cast<int>(outer.size());

    outer_outer_.resize(no, no);
    outer_inner_.resize(no, inner_count_);
    outer_affine_.resize(no);
    for (int r = 0; r < no; ++r) {
        const int i = outer[r];
        for (int c = 0; c < no; ++c) outer_outer_(r, c) = full(i, outer[c]);
        outer_inner_.row(r) = full.row(i).segment(inner_begin_, inner_count_);
        outer_affine_[r] = op.affine()[i];
    }

    lu_.compute(outer_outer_);
    const double rc = lu_.rcond();
    if (!(rc > 1e-14))
        throw NumericalError("Neumann extension block is numerically singular "
                             "(rcond estimate " + std::to_string(rc) + ")");
}

Eigen::VectorXd NeumannExtension::extend(const Eigen::VectorXd& inner) const {
    if (inner.size() != inner_count_)
        throw std::invalid_argument("extend: expected " + std::to_string(inner_count_) +
                                    " inner values");
    const Eigen::VectorXd rhs = -(outer_inner_ * inner) - outer_affine_;
    const Eigen::VectorXd outer = lu_.solve(rhs);

    Eigen::VectorXd full(n_);
    const int no2 = static_cast<int>(outer.size()) / 2;
    full.head(no2) = outer.head(no2);
    full.segment(inner_begin_, inner_count_) = inner;
    full.tail(no2) = outer.tail(no2);
    return full;
}

void NeumannExtension::extend_in_place(Eigen::VectorXd& full) const {
    if (full.size() != n_)
        throw std::invalid_argument("extend_in_place: length mismatch");
    const Eigen::VectorXd ext = extend(full.segment(inner_begin_, inner_count_));
    full = ext;
}

double NeumannExtension::residual_norm(const Eigen::VectorXd& full) const {
    if (full.size() != n_)
        throw std::invalid_argument("residual_norm: length mismatch");
    const int no = static_cast<int>(outer_affine_.size());
    const int no2 = no / 2;
    Eigen::VectorXd outer(no);
    outer.head(no2) = full.head(no2);
    outer.tail(no2) = full.tail(no2);
    const Eigen::VectorXd res = outer_outer_ * outer +
                                outer_inner_ * full.segment(inner_begin_, inner_count_) +
                                outer_affine_;
    return res.lpNorm<Eigen::Infinity>();
}

}  // namespace nlgs
