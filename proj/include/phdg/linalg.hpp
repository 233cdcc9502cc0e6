#ifndef PHDG_LINALG_HPP
#define PHDG_LINALG_HPP

#include <Eigen/Dense>
#include <stdexcept>
#include <vector>

namespace phdg {

/// Raised for runtime linear-algebra failures (singular solves, eigensolver
/// non-convergence). Maps to CLI exit code 2.
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Per-block dense Cholesky factorization of a block-diagonal SPD matrix.
/// Solves and products cost linear time in the total dimension.
class BlockCholesky {
public:
    explicit BlockCholesky(const std::vector<Eigen::MatrixXd>& blocks);

    int dim() const { return dim_; }

    Eigen::VectorXd solve(const Eigen::VectorXd& rhs) const;
    Eigen::MatrixXd solve_dense(const Eigen::MatrixXd& rhs) const;

    /// Multiplication by the original block-diagonal matrix.
    Eigen::VectorXd apply(const Eigen::VectorXd& v) const;

private:
    std::vector<Eigen::LLT<Eigen::MatrixXd>> factors_;
    std::vector<Eigen::MatrixXd> blocks_;
    std::vector<int> offsets_;
    int dim_ = 0;
};

} // namespace phdg

#endif
