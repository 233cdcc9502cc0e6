#ifndef PHDG_SPECTRUM_HPP
#define PHDG_SPECTRUM_HPP

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

#include "phdg/assembly.hpp"

namespace phdg {

struct SpectrumResult {
    std::vector<std::complex<double>> eigenvalues; // sorted by (re, im)
    std::string operator_kind;
    double max_real_part = 0.0;
    double min_real_part = 0.0;
    double spectral_radius = 0.0;
};

/// Dense semi-discrete generator: M^{-1} J, M^{-1}(J-R) or M^{-1}(J-R)Q,
/// depending on the flags. M^{-1} is applied through the block Cholesky
/// factors of M. Guarded to n_dof <= 4096.
Eigen::MatrixXd system_operator(const GlobalPHModel& model, bool include_damping,
                                bool include_constitutive);

/// All eigenvalues of a real square matrix through the Schur-based dense
/// solver, deterministically ordered. Throws NumericalError on
/// non-convergence.
SpectrumResult eigenvalues(const Eigen::MatrixXd& matrix);

/// "conservative" when max |Re lambda| <= 1e-8 rho, "dissipative" when only
/// the left bound holds, "unstable" otherwise.
std::string classify_spectrum(const SpectrumResult& result);

struct SpectrumSummary {
    std::string classification; // "conservative" or "dissipative"
    SpectrumResult spectrum;
};

/// Classifies the full generator M^{-1}(J-R)Q: "conservative" when
/// max |Re lambda| <= 1e-8 rho, otherwise "dissipative" when the spectrum
/// stays in the closed left half plane.
SpectrumSummary spectrum_summary(const GlobalPHModel& model);

} // namespace phdg

#endif
