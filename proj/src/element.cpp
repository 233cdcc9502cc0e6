#include "phdg/element.hpp"

#include <stdexcept>

namespace phdg {

ElementModel element_matrices_split(double z_left, double z_right, const ReferenceBasis& phi,
                                    const ReferenceBasis& psi, const ElementEndParams& at_left,
                                    const ElementEndParams& at_right, double c1, double c2) {
    const double h = z_right - z_left;
    if (!(h > 0.0))
        throw std::invalid_argument("element_matrices: element width must be > 0");
    if (!(c1 > 0.0) || !(c2 > 0.0))
        throw std::invalid_argument("element_matrices: constitutive constants must be > 0");

    const int n1 = phi.size();
    const int n2 = psi.size();

    // Quadrature exact for the degree-2k mass integrand and the
    // degree-(k1-1+k2) coupling integrand.
    const QuadratureRule quad = gauss_rule(std::max(phi.degree(), psi.degree()) + 1);

    ElementModel elem;
    elem.c1 = c1;
    elem.c2 = c2;
    elem.z_left = z_left;
    elem.z_right = z_right;

    elem.M1 = Eigen::MatrixXd::Zero(n1, n1);
    elem.M2 = Eigen::MatrixXd::Zero(n2, n2);
    Eigen::MatrixXd p_volume = Eigen::MatrixXd::Zero(n1, n2);
    for (int q = 0; q < quad.size(); ++q) {
        const double w = quad.weights[q];
        const Eigen::VectorXd phi_q = phi.eval(quad.points[q]);
        const Eigen::VectorXd psi_q = psi.eval(quad.points[q]);
        const Eigen::VectorXd dphi_q = phi.eval_deriv(quad.points[q]);
        elem.M1.noalias() += (h * w) * phi_q * phi_q.transpose();
        elem.M2.noalias() += (h * w) * psi_q * psi_q.transpose();
        // d/dz of phi carries 1/h, dz carries h: the volume coupling is
        // width-independent.
        p_volume.noalias() += w * dphi_q * psi_q.transpose();
    }

    const Eigen::VectorXd phi_l = phi.eval(0.0);
    const Eigen::VectorXd phi_r = phi.eval(1.0);
    const Eigen::VectorXd psi_l = psi.eval(0.0);
    const Eigen::VectorXd psi_r = psi.eval(1.0);

    elem.P = p_volume + phi_l * (1.0 - at_left.beta) * psi_l.transpose() -
             phi_r * at_right.beta * psi_r.transpose();

    elem.R1 = at_left.tau * phi_l * phi_l.transpose() + at_right.tau * phi_r * phi_r.transpose();
    elem.R2 = at_left.xi * psi_l * psi_l.transpose() + at_right.xi * psi_r * psi_r.transpose();

    elem.B1.resize(n1, 2);
    elem.B1.col(0) = phi_l;
    elem.B1.col(1) = phi_r;
    elem.B2.resize(n2, 2);
    elem.B2.col(0) = psi_l;
    elem.B2.col(1) = psi_r;

    return elem;
}

ElementModel element_matrices(double z_left, double z_right, const ReferenceBasis& phi,
                              const ReferenceBasis& psi, const FluxParams& params, double c1,
                              double c2) {
    validate(params);
    const ElementEndParams end{params.beta, params.tau, params.xi};
    return element_matrices_split(z_left, z_right, phi, psi, end, end, c1, c2);
}

double element_hamiltonian(const ElementModel& elem, const Eigen::VectorXd& x1,
                           const Eigen::VectorXd& x2) {
    if (x1.size() != elem.n1() || x2.size() != elem.n2())
        throw std::invalid_argument("element_hamiltonian: coefficient size mismatch");
    return 0.5 * (elem.c1 * x1.dot(elem.M1 * x1) + elem.c2 * x2.dot(elem.M2 * x2));
}

Eigen::Vector4d element_input_vector(const FluxParams& params, const NeighborTraces& traces) {
    const double b = params.beta;
    Eigen::Vector4d u;
    u[0] = (1.0 - b) * traces.e1_left + params.xi * traces.e2_left;
    u[1] = -b * traces.e1_right + params.xi * traces.e2_right;
    u[2] = b * traces.e2_left + params.tau * traces.e1_left;
    u[3] = (b - 1.0) * traces.e2_right + params.tau * traces.e1_right;
    return u;
}

} // namespace phdg
