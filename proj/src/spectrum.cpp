#include "phdg/spectrum.hpp"

#include <algorithm>

#include "phdg/linalg.hpp"

namespace phdg {

Eigen::MatrixXd system_operator(const GlobalPHModel& model, bool include_damping,
                                bool include_constitutive) {
    if (model.n_dof > 4096)
        throw std::invalid_argument("system_operator: n_dof = " + std::to_string(model.n_dof) +
                                    " exceeds the dense-work guard (4096)");
    Eigen::MatrixXd flow =
        include_damping ? Eigen::MatrixXd(model.J - model.R) : Eigen::MatrixXd(model.J);
    if (include_constitutive)
        flow = flow * Eigen::MatrixXd(model.Q);
    const BlockCholesky mass(model.mass_blocks);
    return mass.solve_dense(flow);
}

SpectrumResult eigenvalues(const Eigen::MatrixXd& matrix) {
    if (matrix.rows() != matrix.cols())
        throw std::invalid_argument("eigenvalues: matrix must be square");
    if (!matrix.allFinite())
        throw std::invalid_argument("eigenvalues: matrix has non-finite entries");

    Eigen::EigenSolver<Eigen::MatrixXd> solver(matrix, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
        throw NumericalError("eigenvalues: QR iteration did not converge");

    SpectrumResult result;
    result.eigenvalues.assign(solver.eigenvalues().data(),
                              solver.eigenvalues().data() + solver.eigenvalues().size());
    std::sort(result.eigenvalues.begin(), result.eigenvalues.end(),
              [](const std::complex<double>& a, const std::complex<double>& b) {
                  if (a.real() != b.real())
                      return a.real() < b.real();
                  return a.imag() < b.imag();
              });

    if (!result.eigenvalues.empty()) {
        result.max_real_part = result.eigenvalues.front().real();
        result.min_real_part = result.eigenvalues.front().real();
        for (const auto& ev : result.eigenvalues) {
            result.max_real_part = std::max(result.max_real_part, ev.real());
            result.min_real_part = std::min(result.min_real_part, ev.real());
            result.spectral_radius = std::max(result.spectral_radius, std::abs(ev));
        }
    }
    return result;
}

std::string classify_spectrum(const SpectrumResult& result) {
    const double rho = result.spectral_radius;
    const double max_abs_re =
        std::max(std::abs(result.max_real_part), std::abs(result.min_real_part));
    if (max_abs_re <= 1e-8 * rho)
        return "conservative";
    if (result.max_real_part <= 1e-8 * rho)
        return "dissipative";
    return "unstable";
}

SpectrumSummary spectrum_summary(const GlobalPHModel& model) {
    SpectrumSummary summary;
    summary.spectrum = eigenvalues(system_operator(model, true, true));
    summary.spectrum.operator_kind = "Minv(J-R)Q";
    summary.classification = classify_spectrum(summary.spectrum);
    return summary;
}

} // namespace phdg
