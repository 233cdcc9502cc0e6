#include "phdg/linalg.hpp"

namespace phdg {

BlockCholesky::BlockCholesky(const std::vector<Eigen::MatrixXd>& blocks) : blocks_(blocks) {
    factors_.reserve(blocks_.size());
    offsets_.reserve(blocks_.size());
    for (const auto& block : blocks_) {
        if (block.rows() != block.cols())
            throw std::invalid_argument("BlockCholesky: blocks must be square");
        offsets_.push_back(dim_);
        dim_ += static_cast<int>(block.rows());
        factors_.emplace_back(block);
        if (factors_.back().info() != Eigen::Success)
            throw NumericalError("BlockCholesky: block is not positive definite");
    }
}

Eigen::VectorXd BlockCholesky::solve(const Eigen::VectorXd& rhs) const {
    if (rhs.size() != dim_)
        throw std::invalid_argument("BlockCholesky::solve: dimension mismatch");
    Eigen::VectorXd out(dim_);
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        const int off = offsets_[b];
        const int n = static_cast<int>(blocks_[b].rows());
        out.segment(off, n) = factors_[b].solve(rhs.segment(off, n));
    }
    return out;
}

Eigen::MatrixXd BlockCholesky::solve_dense(const Eigen::MatrixXd& rhs) const {
    if (rhs.rows() != dim_)
        throw std::invalid_argument("BlockCholesky::solve_dense: dimension mismatch");
    Eigen::MatrixXd out(rhs.rows(), rhs.cols());
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        const int off = offsets_[b];
        const int n = static_cast<int>(blocks_[b].rows());
        out.middleRows(off, n) = factors_[b].solve(rhs.middleRows(off, n));
    }
    return out;
}

Eigen::VectorXd BlockCholesky::apply(const Eigen::VectorXd& v) const {
    if (v.size() != dim_)
        throw std::invalid_argument("BlockCholesky::apply: dimension mismatch");
    Eigen::VectorXd out(dim_);
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        const int off = offsets_[b];
        const int n = static_cast<int>(blocks_[b].rows());
        out.segment(off, n).noalias() = blocks_[b] * v.segment(off, n);
    }
    return out;
}

} // namespace phdg
