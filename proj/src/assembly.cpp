#include "phdg/assembly.hpp"

#include <Eigen/Dense>

#include "phdg/linalg.hpp"

namespace phdg {

BoundaryFluxRule boundary_flux_rule(const BoundaryConditions& bc) {
    // At the ghost interface the element reads the ghost side for the
    // prescribed field and its own trace for the other: the left boundary
    // ghost sits on the "left" slot (beta = 0 reads left e1 / right e2), the
    // right boundary ghost on the "right" slot (beta = 0 reads right e2).
    BoundaryFluxRule rule;
    rule.at_a = {bc.left == BoundaryKind::Dirichlet ? 0.0 : 1.0, 0.0, 0.0};
    rule.at_b = {bc.right == BoundaryKind::Neumann ? 0.0 : 1.0, 0.0, 0.0};
    return rule;
}

InterfaceFlux left_boundary_flux(const BoundaryConditions& bc, double u, double e1_interior,
                                 double e2_interior) {
    const ElementEndParams end = boundary_flux_rule(bc).at_a;
    const FluxParams ghost{end.beta, end.tau, end.xi};
    const bool dirichlet = bc.left == BoundaryKind::Dirichlet;
    return interface_flux(ghost, dirichlet ? u : 0.0, e1_interior, dirichlet ? 0.0 : u,
                          e2_interior);
}

InterfaceFlux right_boundary_flux(const BoundaryConditions& bc, double u, double e1_interior,
                                  double e2_interior) {
    const ElementEndParams end = boundary_flux_rule(bc).at_b;
    const FluxParams ghost{end.beta, end.tau, end.xi};
    const bool dirichlet = bc.right == BoundaryKind::Dirichlet;
    return interface_flux(ghost, e1_interior, dirichlet ? u : 0.0, e2_interior,
                          dirichlet ? 0.0 : u);
}

namespace {

using Triplets = std::vector<Eigen::Triplet<double>>;

void add_block(Triplets& out, int row0, int col0, const Eigen::MatrixXd& block) {
    for (int j = 0; j < block.rows(); ++j)
        for (int m = 0; m < block.cols(); ++m)
            if (block(j, m) != 0.0)
                out.emplace_back(row0 + j, col0 + m, block(j, m));
}

// Inserts v at (r,c) and -v at (c,r); the assembled matrix is then
// skew-symmetric exactly, not merely to rounding.
void add_skew_pair(Triplets& out, int row, int col, double v) {
    if (v == 0.0)
        return;
    out.emplace_back(row, col, v);
    out.emplace_back(col, row, -v);
}

void add_skew_outer(Triplets& out, int row0, int col0, const Eigen::VectorXd& left,
                    const Eigen::VectorXd& right, double scale) {
    for (int j = 0; j < left.size(); ++j)
        for (int m = 0; m < right.size(); ++m)
            add_skew_pair(out, row0 + j, col0 + m, scale * left[j] * right[m]);
}

// Mirrored insertion of the same value keeps R symmetric exactly.
void add_sym_outer(Triplets& out, int row0, int col0, const Eigen::VectorXd& left,
                   const Eigen::VectorXd& right, double scale) {
    for (int j = 0; j < left.size(); ++j)
        for (int m = 0; m < right.size(); ++m) {
            const double v = scale * left[j] * right[m];
            if (v == 0.0)
                continue;
            out.emplace_back(row0 + j, col0 + m, v);
            out.emplace_back(col0 + m, row0 + j, v);
        }
}

} // namespace

GlobalPHModel assemble_global(const Mesh1D& mesh, const ReferenceBasis& phi,
                              const ReferenceBasis& psi, const FluxParams& params,
                              const BoundaryConditions& bc, double c1, double c2) {
    validate(params);
    if (!(c1 > 0.0) || !(c2 > 0.0))
        throw std::invalid_argument("assemble_global: constitutive constants must be > 0");

    const int num_elems = mesh.num_elements();
    const int n1 = phi.size();
    const int n2 = psi.size();
    const int block = n1 + n2;
    const int n = num_elems * block;

    GlobalPHModel model;
    model.n_dof = n;
    model.mesh = mesh;
    model.phi = phi;
    model.psi = psi;
    model.flux = params;
    model.bc = bc;
    model.c1 = c1;
    model.c2 = c2;
    model.mass_blocks.reserve(2 * static_cast<std::size_t>(num_elems));

    const BoundaryFluxRule rule = boundary_flux_rule(bc);
    const ElementEndParams interior{params.beta, params.tau, params.xi};

    Triplets tm, tj, tr, tq, tg;

    for (int e = 0; e < num_elems; ++e) {
        const auto [zl, zr] = mesh.element_interval(e);
        const ElementEndParams at_left = (e == 0) ? rule.at_a : interior;
        const ElementEndParams at_right = (e == num_elems - 1) ? rule.at_b : interior;
        const ElementModel elem =
            element_matrices_split(zl, zr, phi, psi, at_left, at_right, c1, c2);

        const int f1 = model.x1_offset(e);
        const int f2 = model.x2_offset(e);

        add_block(tm, f1, f1, elem.M1);
        add_block(tm, f2, f2, elem.M2);
        model.mass_blocks.push_back(elem.M1);
        model.mass_blocks.push_back(elem.M2);

        for (int j = 0; j < n1; ++j)
            tq.emplace_back(f1 + j, f1 + j, c1);
        for (int m = 0; m < n2; ++m)
            tq.emplace_back(f2 + m, f2 + m, c2);

        // Element structure block [0 P; -P^T 0], written once and mirrored.
        for (int j = 0; j < n1; ++j)
            for (int m = 0; m < n2; ++m)
                add_skew_pair(tj, f1 + j, f2 + m, elem.P(j, m));

        add_block(tr, f1, f1, elem.R1);
        add_block(tr, f2, f2, elem.R2);
    }

    // Interface terms: conservative couplings into J, cross-element damping
    // couplings into R. The own-trace contributions already live in the
    // element P / R1 / R2 blocks above.
    const Eigen::VectorXd phi0 = phi.eval(0.0);
    const Eigen::VectorXd phi1 = phi.eval(1.0);
    const Eigen::VectorXd psi0 = psi.eval(0.0);
    const Eigen::VectorXd psi1 = psi.eval(1.0);

    for (int v = 1; v < num_elems; ++v) {
        const int left = v - 1;
        const int right = v;
        // w1-equation of the left element reads e2 of the right element, and
        // the mirrored pair covers the w2-equation of the right element
        // reading e1 of the left one.
        add_skew_outer(tj, model.x1_offset(left), model.x2_offset(right), phi1, psi0,
                       params.beta - 1.0);
        add_skew_outer(tj, model.x1_offset(right), model.x2_offset(left), phi0, psi1,
                       params.beta);

        add_sym_outer(tr, model.x1_offset(left), model.x1_offset(right), phi1, phi0,
                      -params.tau);
        add_sym_outer(tr, model.x2_offset(left), model.x2_offset(right), psi1, psi0,
                      -params.xi);
    }

    // Boundary inputs. The column picks up the test-function trace of the
    // equation the ghost value enters, signed by the orientation of the
    // element boundary term.
    if (bc.left == BoundaryKind::Dirichlet) {
        for (int m = 0; m < n2; ++m)
            if (psi0[m] != 0.0)
                tg.emplace_back(model.x2_offset(0) + m, 0, psi0[m]);
    } else {
        for (int j = 0; j < n1; ++j)
            if (phi0[j] != 0.0)
                tg.emplace_back(model.x1_offset(0) + j, 0, phi0[j]);
    }
    if (bc.right == BoundaryKind::Neumann) {
        for (int j = 0; j < n1; ++j)
            if (phi1[j] != 0.0)
                tg.emplace_back(model.x1_offset(num_elems - 1) + j, 1, -phi1[j]);
    } else {
        for (int m = 0; m < n2; ++m)
            if (psi1[m] != 0.0)
                tg.emplace_back(model.x2_offset(num_elems - 1) + m, 1, -psi1[m]);
    }

    model.M.resize(n, n);
    model.J.resize(n, n);
    model.R.resize(n, n);
    model.Q.resize(n, n);
    model.G.resize(n, 2);
    model.M.setFromTriplets(tm.begin(), tm.end());
    model.J.setFromTriplets(tj.begin(), tj.end());
    model.R.setFromTriplets(tr.begin(), tr.end());
    model.Q.setFromTriplets(tq.begin(), tq.end());
    model.G.setFromTriplets(tg.begin(), tg.end());
    return model;
}

StructureReport structure_report(const GlobalPHModel& model) {
    StructureReport report;

    const Eigen::SparseMatrix<double> j_defect =
        model.J + Eigen::SparseMatrix<double>(model.J.transpose());
    report.j_skew_max = j_defect.coeffs().size() > 0 ? j_defect.coeffs().cwiseAbs().maxCoeff() : 0.0;

    const Eigen::SparseMatrix<double> r_defect =
        model.R - Eigen::SparseMatrix<double>(model.R.transpose());
    report.r_asym_max = r_defect.coeffs().size() > 0 ? r_defect.coeffs().cwiseAbs().maxCoeff() : 0.0;

    report.r_is_zero = true;
    for (int k = 0; k < model.R.outerSize(); ++k)
        for (Eigen::SparseMatrix<double>::InnerIterator it(model.R, k); it; ++it)
            if (it.value() != 0.0)
                report.r_is_zero = false;

    const bool dense_checked = model.n_dof <= 4096;
    if (dense_checked) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> r_eigs(Eigen::MatrixXd(model.R));
        report.r_min_eig = r_eigs.eigenvalues().minCoeff();
        report.r_norm = r_eigs.eigenvalues().cwiseAbs().maxCoeff();
        if (report.r_norm > 0.0)
            report.r_rank = static_cast<int>(
                (r_eigs.eigenvalues().array() > 1e-8 * report.r_norm).count());

        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> m_eigs(Eigen::MatrixXd(model.M));
        report.m_min_eig = m_eigs.eigenvalues().minCoeff();
    }

    bool spd = true;
    try {
        BlockCholesky chol(model.mass_blocks);
        spd = chol.dim() == model.n_dof;
    } catch (const NumericalError&) {
        spd = false;
    }
    report.m_spd = spd;

    report.j_ok = report.j_skew_max == 0.0;
    report.r_sym_ok = report.r_asym_max == 0.0;
    report.r_psd_ok = report.r_min_eig >= -1e-13 * report.r_norm;
    report.m_ok = report.m_spd && (!dense_checked || report.m_min_eig > 0.0);
    return report;
}

} // namespace phdg
