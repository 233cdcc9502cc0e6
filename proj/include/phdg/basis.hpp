#ifndef PHDG_BASIS_HPP
#define PHDG_BASIS_HPP

#include <Eigen/Dense>

namespace phdg {

/// Nodal Lagrange basis of degree k on the reference interval [0,1] with
/// Gauss-Lobatto-Legendre node placement, so the endpoints 0 and 1 are nodes
/// and boundary traces reduce to single nodal coefficients.
///
/// Evaluation uses the barycentric form; derivatives go through the nodal
/// differentiation matrix, which is exact for polynomials of degree <= k.
class ReferenceBasis {
public:
    ReferenceBasis() : ReferenceBasis(1) {}
    explicit ReferenceBasis(int degree);

    int degree() const { return degree_; }
    int size() const { return degree_ + 1; }

    const Eigen::VectorXd& nodes() const { return nodes_; }

    /// [l_0(zeta), ..., l_k(zeta)]; zeta must lie in [0,1].
    Eigen::VectorXd eval(double zeta) const;

    /// [l_0'(zeta), ..., l_k'(zeta)] with respect to the reference coordinate.
    Eigen::VectorXd eval_deriv(double zeta) const;

    /// D(i,j) = l_j'(node_i).
    const Eigen::MatrixXd& diff_matrix() const { return diff_; }

private:
    int degree_ = 1;
    Eigen::VectorXd nodes_;
    Eigen::VectorXd bary_weights_;
    Eigen::MatrixXd diff_;
};

/// Rejects k = 0: a constant basis has no endpoint nodes, so interface
/// traces could not be read off single coefficients.
ReferenceBasis reference_basis(int k);

struct QuadratureRule {
    Eigen::VectorXd points;  // in [0,1]
    Eigen::VectorXd weights; // positive, summing to 1
    int size() const { return static_cast<int>(points.size()); }
};

/// n-point Gauss-Legendre rule on [0,1]; exact for polynomials of degree <= 2n-1.
QuadratureRule gauss_rule(int n);

} // namespace phdg

#endif
