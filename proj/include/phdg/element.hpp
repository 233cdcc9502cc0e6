#ifndef PHDG_ELEMENT_HPP
#define PHDG_ELEMENT_HPP

#include <Eigen/Dense>

#include "phdg/basis.hpp"
#include "phdg/flux.hpp"

namespace phdg {

/// Per-element state space model
///
///   [M1 0; 0 M2] d/dt [x1; x2] = ([0 P; -P^T 0] - [R1 0; 0 R2]) [e1; e2]
///                                + [0 B1; B2 0] U
///
/// with efforts e1 = c1 x1, e2 = c2 x2 and the 4-vector U collecting the
/// neighbor traces weighted by the flux parameters (see element_input_vector).
struct ElementModel {
    Eigen::MatrixXd M1, M2; // mass matrices of the two bases
    Eigen::MatrixXd P;      // coupling: volume integral plus interface averaging terms
    Eigen::MatrixXd R1, R2; // endpoint jump penalties (PSD, rank <= 2)
    Eigen::MatrixXd B1, B2; // endpoint trace maps, (k+1) x 2
    double c1 = 1.0, c2 = 1.0;
    double z_left = 0.0, z_right = 1.0;

    double width() const { return z_right - z_left; }
    int n1() const { return static_cast<int>(M1.rows()); }
    int n2() const { return static_cast<int>(M2.rows()); }
};

/// Flux parameters as seen from one element end. The assembly substitutes
/// beta = tau = xi = 0 style overrides at domain boundaries (ghost values).
struct ElementEndParams {
    double beta;
    double tau;
    double xi;
};

/// Element matrices with independent flux parameters at the two ends.
ElementModel element_matrices_split(double z_left, double z_right, const ReferenceBasis& phi,
                                    const ReferenceBasis& psi, const ElementEndParams& at_left,
                                    const ElementEndParams& at_right, double c1, double c2);

/// Element matrices with the same flux parameters at both ends (interior element).
ElementModel element_matrices(double z_left, double z_right, const ReferenceBasis& phi,
                              const ReferenceBasis& psi, const FluxParams& params, double c1,
                              double c2);

/// 1/2 (c1 x1^T M1 x1 + c2 x2^T M2 x2); the stored energy of one element.
double element_hamiltonian(const ElementModel& elem, const Eigen::VectorXd& x1,
                           const Eigen::VectorXd& x2);

/// Effort traces of the two neighbors at the shared vertices.
struct NeighborTraces {
    double e1_left = 0.0; // left neighbor's e1 at z_i
    double e2_left = 0.0; // left neighbor's e2 at z_i
    double e1_right = 0.0; // right neighbor's e1 at z_{i+1}
    double e2_right = 0.0; // right neighbor's e2 at z_{i+1}
};

/// The stacked element input
///   U = [ (1-beta) e1_left + xi e2_left,
///         -beta e1_right + xi e2_right,
///         beta e2_left + tau e1_left,
///         (beta-1) e2_right + tau e1_right ]
/// whose first two rows feed B2 (the x2 equation) and last two feed B1.
Eigen::Vector4d element_input_vector(const FluxParams& params, const NeighborTraces& traces);

} // namespace phdg

#endif
