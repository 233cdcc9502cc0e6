#ifndef PHDG_ASSEMBLY_HPP
#define PHDG_ASSEMBLY_HPP

#include <Eigen/Sparse>
#include <vector>

#include "phdg/basis.hpp"
#include "phdg/element.hpp"
#include "phdg/flux.hpp"
#include "phdg/mesh.hpp"

namespace phdg {

/// Boundary condition kinds per boundary point: Dirichlet-type prescribes the
/// e1 effort, Neumann-type prescribes the e2 effort (through the boundary
/// flux; the outward normal is -1 at a and +1 at b).
enum class BoundaryKind { Dirichlet, Neumann };

struct BoundaryConditions {
    BoundaryKind left = BoundaryKind::Dirichlet;
    BoundaryKind right = BoundaryKind::Neumann;
};

/// Ghost-interface flux parameters at the two domain boundaries. Penalties
/// are always zero there; beta selects which side of the ghost interface is
/// read, so that the input value becomes the flux of the prescribed field and
/// the interior trace becomes the flux of the other one.
struct BoundaryFluxRule {
    ElementEndParams at_a;
    ElementEndParams at_b;
};

BoundaryFluxRule boundary_flux_rule(const BoundaryConditions& bc);

/// Boundary flux values by the ghost-value mechanism; u is the boundary input,
/// the interior traces come from the adjacent element.
InterfaceFlux left_boundary_flux(const BoundaryConditions& bc, double u, double e1_interior,
                                 double e2_interior);
InterfaceFlux right_boundary_flux(const BoundaryConditions& bc, double u, double e1_interior,
                                  double e2_interior);

/// Assembled global model
///
///   M dX/dt = (J - R) E + G U,   E = Q X,   Y = G^T E
///
/// with M, Q block diagonal, J exactly skew-symmetric (paired insertion of
/// +v/-v), R exactly symmetric and PSD, and G carrying one column per
/// boundary input.
///
/// State ordering is element-major, field-major within the element:
/// [x1 of element 0, x2 of element 0, x1 of element 1, ...].
struct GlobalPHModel {
    int n_dof = 0;
    Eigen::SparseMatrix<double> M;
    Eigen::SparseMatrix<double> J;
    Eigen::SparseMatrix<double> R;
    Eigen::SparseMatrix<double> Q;
    Eigen::SparseMatrix<double> G; // n_dof x 2

    /// Diagonal blocks of M in state order, for linear-time factorization.
    std::vector<Eigen::MatrixXd> mass_blocks;

    Mesh1D mesh{std::vector<double>{0.0, 1.0}};
    ReferenceBasis phi;
    ReferenceBasis psi;
    FluxParams flux;
    BoundaryConditions bc;
    double c1 = 1.0;
    double c2 = 1.0;

    int num_elements() const { return mesh.num_elements(); }
    int block_size() const { return phi.size() + psi.size(); }
    int x1_offset(int element) const { return element * block_size(); }
    int x2_offset(int element) const { return element * block_size() + phi.size(); }
};

GlobalPHModel assemble_global(const Mesh1D& mesh, const ReferenceBasis& phi,
                              const ReferenceBasis& psi, const FluxParams& params,
                              const BoundaryConditions& bc, double c1, double c2);

/// Measured structural properties with pass/fail against fixed tolerances:
/// ||J+J^T||_max = 0, ||R-R^T||_max = 0, min eig(R) >= -1e-13 ||R||,
/// M positive definite.
struct StructureReport {
    double j_skew_max = 0.0;
    double r_asym_max = 0.0;
    double r_norm = 0.0; // largest |eigenvalue| of R
    double r_min_eig = 0.0;
    int r_rank = 0;
    bool r_is_zero = true;
    double m_min_eig = 0.0;
    bool m_spd = false;

    bool j_ok = false;
    bool r_sym_ok = false;
    bool r_psd_ok = false;
    bool m_ok = false;
    bool pass() const { return j_ok && r_sym_ok && r_psd_ok && m_ok; }
};

StructureReport structure_report(const GlobalPHModel& model);

} // namespace phdg

#endif
