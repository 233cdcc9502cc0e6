#ifndef PHDG_SCENARIO_HPP
#define PHDG_SCENARIO_HPP

#include <functional>
#include <utility>
#include <vector>

#include "phdg/assembly.hpp"
#include "phdg/simulate.hpp"

namespace phdg {

/// The boundary-driven wave benchmark: unit-coefficient wave system on [0,1],
/// sine pulse on e1 at the left boundary, zero e2 at the right one.
struct WaveBenchmark {
    static constexpr double domain_a = 0.0;
    static constexpr double domain_b = 1.0;
    static constexpr double c1 = 1.0;
    static constexpr double c2 = 1.0;
    static constexpr double T = 1.5;
    static constexpr double dt = 2.5e-4;
    static constexpr int num_elements = 50;
    static constexpr int degree = 1;
    static constexpr double pulse_end = 0.125;

    static BoundaryConditions bc() {
        return {BoundaryKind::Dirichlet, BoundaryKind::Neumann};
    }
    static InputSignal input();
    static GlobalPHModel model(const FluxParams& flux, int n = num_elements, int k = degree);
};

/// sin(8 pi t) on [0, 0.125), zero afterwards (continuous at the switch).
double paper_pulse(double t);

/// Method-of-characteristics solution (p, q) of the benchmark for 0 <= t < 2:
/// a right-moving pulse u1(t - z) plus, after the reflection at z = 1, a
/// left-moving image u1(t + z - 2) with the q-sign flipped.
std::pair<double, double> exact_pulse_solution(double z, double t,
                                               const std::function<double(double)>& u1);

/// Elementwise Gauss quadrature (max degree + 2 points) of the squared field
/// error against exact field functions, using the discontinuous per-element
/// reconstruction of the state snapshot.
double l2_error(const GlobalPHModel& model, const Eigen::VectorXd& state,
                const std::function<double(double)>& p_exact,
                const std::function<double(double)>& q_exact);

/// Quarter-wave eigenfrequencies omega_m = (2m-1) pi / 2 of the homogeneous
/// mixed boundary value problem (e1 fixed at a, e2 fixed at b).
std::vector<double> exact_eigenfrequencies(int m_max);

} // namespace phdg

#endif
