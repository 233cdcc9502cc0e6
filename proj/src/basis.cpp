#include "phdg/basis.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace phdg {

namespace {

// Gauss-Lobatto-Legendre nodes on [-1,1] for polynomial degree k (k+1 nodes):
// the endpoints plus the roots of P_k'. Newton iteration on the fixed point
// x = x - (x P_k(x) - P_{k-1}(x)) / ((k+1) P_k(x)), started from the
// Chebyshev-Gauss-Lobatto points.
Eigen::VectorXd gll_nodes_reference(int k) {
    const int n = k + 1;
    Eigen::VectorXd x(n);
    for (int j = 0; j < n; ++j)
        x[j] = -std::cos(M_PI * j / k);

    Eigen::MatrixXd p(n, n); // Legendre values P_0..P_k at the current iterate
    for (int iter = 0; iter < 200; ++iter) {
        Eigen::VectorXd xold = x;
        p.col(0).setOnes();
        p.col(1) = x;
        for (int r = 2; r <= k; ++r)
            p.col(r) = ((2.0 * r - 1.0) * x.cwiseProduct(p.col(r - 1)) - (r - 1.0) * p.col(r - 2)) / r;
        x = xold.array() -
            (x.cwiseProduct(p.col(k)) - p.col(k - 1)).array() / (n * p.col(k).array());
        if ((x - xold).cwiseAbs().maxCoeff() < 1e-15)
            break;
    }

    // Clamp the exact endpoints and symmetrize interior nodes pairwise.
    x[0] = -1.0;
    x[n - 1] = 1.0;
    for (int j = 1; 2 * j < n - 1; ++j) {
        const double s = 0.5 * (x[n - 1 - j] - x[j]);
        x[j] = -s;
        x[n - 1 - j] = s;
    }
    if (n % 2 == 1)
        x[(n - 1) / 2] = 0.0;
    return x;
}

} // namespace

ReferenceBasis::ReferenceBasis(int degree) : degree_(degree) {
    if (degree < 1)
        throw std::invalid_argument("ReferenceBasis: degree must be >= 1 "
                                    "(endpoint nodes are required for trace evaluation)");
    const int n = degree + 1;

    Eigen::VectorXd ref = gll_nodes_reference(degree);
    nodes_.resize(n);
    for (int j = 0; j < n; ++j)
        nodes_[j] = 0.5 * (ref[j] + 1.0);
    nodes_[0] = 0.0;
    nodes_[n - 1] = 1.0;

    // Barycentric weights w_j = 1 / prod_{m != j} (x_j - x_m), normalized by
    // the largest magnitude to keep them O(1).
    bary_weights_.resize(n);
    for (int j = 0; j < n; ++j) {
        double w = 1.0;
        for (int m = 0; m < n; ++m)
            if (m != j)
                w /= (nodes_[j] - nodes_[m]);
        bary_weights_[j] = w;
    }
    bary_weights_ /= bary_weights_.cwiseAbs().maxCoeff();

    // Differentiation matrix D(i,j) = l_j'(x_i) with the negative-sum trick
    // for the diagonal.
    diff_.resize(n, n);
    for (int i = 0; i < n; ++i) {
        double diag = 0.0;
        for (int j = 0; j < n; ++j) {
            if (i == j)
                continue;
            diff_(i, j) = (bary_weights_[j] / bary_weights_[i]) / (nodes_[i] - nodes_[j]);
            diag -= diff_(i, j);
        }
        diff_(i, i) = diag;
    }
}

Eigen::VectorXd ReferenceBasis::eval(double zeta) const {
    if (!(zeta >= 0.0 && zeta <= 1.0))
        throw std::domain_error("ReferenceBasis::eval: zeta = " + std::to_string(zeta) +
                                " outside [0,1]");
    const int n = size();
    Eigen::VectorXd values(n);

    // Exact Kronecker vector when zeta hits a node.
    for (int j = 0; j < n; ++j) {
        if (zeta == nodes_[j]) {
            values.setZero();
            values[j] = 1.0;
            return values;
        }
    }

    double denom = 0.0;
    for (int j = 0; j < n; ++j) {
        values[j] = bary_weights_[j] / (zeta - nodes_[j]);
        denom += values[j];
    }
    values /= denom;
    return values;
}

Eigen::VectorXd ReferenceBasis::eval_deriv(double zeta) const {
    // l_j' has degree k-1, so its nodal interpolant is exact: l_j'(z) =
    // sum_m D(m,j) l_m(z).
    return diff_.transpose() * eval(zeta);
}

ReferenceBasis reference_basis(int k) {
    return ReferenceBasis(k);
}

QuadratureRule gauss_rule(int n) {
    if (n < 1)
        throw std::invalid_argument("gauss_rule: require n >= 1");

    QuadratureRule rule;
    rule.points.resize(n);
    rule.weights.resize(n);

    // Roots of P_n on (-1,1) by Newton iteration, exploiting symmetry.
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int r = 2; r <= n; ++r) {
                const double p2 = ((2.0 * r - 1.0) * x * p1 - (r - 1.0) * p0) / r;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16)
                break;
        }
        // Re-evaluate the derivative at the converged root for the weight.
        {
            double p0 = 1.0, p1 = x;
            for (int r = 2; r <= n; ++r) {
                const double p2 = ((2.0 * r - 1.0) * x * p1 - (r - 1.0) * p0) / r;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);

        // Map from [-1,1] to [0,1]: point (x+1)/2 and weight w/2; place the
        // symmetric partner explicitly.
        rule.points[i] = 0.5 * (1.0 - x); // x descends from 1, points ascend
        rule.points[n - 1 - i] = 0.5 * (1.0 + x);
        rule.weights[i] = 0.5 * w;
        rule.weights[n - 1 - i] = 0.5 * w;
    }
    if (n % 2 == 1)
        rule.points[(n - 1) / 2] = 0.5;
    return rule;
}

} // namespace phdg
