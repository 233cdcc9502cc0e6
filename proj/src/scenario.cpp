#include "phdg/scenario.hpp"

#include <cmath>
#include <stdexcept>

namespace phdg {

double paper_pulse(double t) {
    if (t >= 0.0 && t < 0.125)
        return std::sin(8.0 * M_PI * t);
    return 0.0;
}

InputSignal WaveBenchmark::input() {
    InputSignal signal;
    signal.u1 = paper_pulse;
    signal.u2 = [](double) { return 0.0; };
    return signal;
}

GlobalPHModel WaveBenchmark::model(const FluxParams& flux, int n, int k) {
    const Mesh1D mesh = build_uniform_mesh(domain_a, domain_b, n);
    const ReferenceBasis basis(k);
    return assemble_global(mesh, basis, basis, flux, bc(), c1, c2);
}

std::pair<double, double> exact_pulse_solution(double z, double t,
                                               const std::function<double(double)>& u1) {
    if (!(z >= 0.0 && z <= 1.0))
        throw std::invalid_argument("exact_pulse_solution: z outside [0,1]");
    if (!(t >= 0.0 && t < 2.0))
        throw std::invalid_argument(
            "exact_pulse_solution: valid for 0 <= t < 2 (before the second reflection)");

    const double incoming = (t - z >= 0.0) ? u1(t - z) : 0.0;
    const double reflected = (t + z - 2.0 >= 0.0) ? u1(t + z - 2.0) : 0.0;
    return {incoming + reflected, incoming - reflected};
}

double l2_error(const GlobalPHModel& model, const Eigen::VectorXd& state,
                const std::function<double(double)>& p_exact,
                const std::function<double(double)>& q_exact) {
    if (state.size() != model.n_dof)
        throw std::invalid_argument("l2_error: state dimension mismatch");

    const QuadratureRule quad =
        gauss_rule(std::max(model.phi.degree(), model.psi.degree()) + 2);
    const int n1 = model.phi.size();
    const int n2 = model.psi.size();

    double total = 0.0;
    for (int e = 0; e < model.num_elements(); ++e) {
        const auto [zl, zr] = model.mesh.element_interval(e);
        const double h = zr - zl;
        const Eigen::VectorXd x1 = state.segment(model.x1_offset(e), n1);
        const Eigen::VectorXd x2 = state.segment(model.x2_offset(e), n2);
        for (int q = 0; q < quad.size(); ++q) {
            const double zeta = quad.points[q];
            const double z = zl + h * zeta;
            const double p_h = model.phi.eval(zeta).dot(x1);
            const double q_h = model.psi.eval(zeta).dot(x2);
            const double dp = p_h - p_exact(z);
            const double dq = q_h - q_exact(z);
            total += h * quad.weights[q] * (dp * dp + dq * dq);
        }
    }
    return std::sqrt(total);
}

std::vector<double> exact_eigenfrequencies(int m_max) {
    if (m_max < 1)
        throw std::invalid_argument("exact_eigenfrequencies: m_max must be >= 1");
    std::vector<double> omega(static_cast<std::size_t>(m_max));
    for (int m = 1; m <= m_max; ++m)
        omega[static_cast<std::size_t>(m - 1)] = (2.0 * m - 1.0) * M_PI / 2.0;
    return omega;
}

} // namespace phdg
