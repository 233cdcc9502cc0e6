#ifndef PHDG_SIMULATE_HPP
#define PHDG_SIMULATE_HPP

#include <Eigen/Sparse>
#include <Eigen/SparseLU>
#include <functional>
#include <vector>

#include "phdg/assembly.hpp"
#include "phdg/linalg.hpp"

namespace phdg {

struct InputSignal {
    std::function<double(double)> u1 = [](double) { return 0.0; };
    std::function<double(double)> u2 = [](double) { return 0.0; };

    Eigen::Vector2d operator()(double t) const { return {u1(t), u2(t)}; }
};

/// 1/2 X^T Q M X, the total stored energy.
double hamiltonian(const GlobalPHModel& model, const Eigen::VectorXd& state);

/// One-step implicit midpoint map for M dX/dt = (J-R) Q X + G U. The system
/// matrix M - dt/2 (J-R) Q is factorized once per (model, dt) pair.
class MidpointIntegrator {
public:
    MidpointIntegrator(const GlobalPHModel& model, double dt);

    double dt() const { return dt_; }

    /// X_{n+1} from X_n; the input is sampled at the step midpoint.
    Eigen::VectorXd step(const Eigen::VectorXd& state, double t, const InputSignal& input) const;

private:
    const GlobalPHModel* model_;
    double dt_;
    Eigen::SparseMatrix<double> rhs_matrix_; // M + dt/2 (J-R) Q
    Eigen::SparseLU<Eigen::SparseMatrix<double>> solver_;
};

struct Trajectory {
    // Sampled per step (step 0 = initial condition):
    std::vector<double> hamiltonian_times;
    std::vector<double> hamiltonian_trace;

    // Sampled at step midpoints:
    std::vector<double> output_times;
    std::vector<Eigen::Vector2d> output_trace;
    std::vector<double> power_residuals; // per-step discrete balance defect

    // Decimated state snapshots:
    std::vector<double> times;
    std::vector<Eigen::VectorXd> states;

    int num_steps() const { return static_cast<int>(power_residuals.size()); }

    /// State snapshot closest to t; throws if no sample lies within tol.
    const Eigen::VectorXd& state_at(double t, double tol) const;
};

struct SimulateOptions {
    double T = 1.0;
    double dt = 1e-3;
    int output_every = 1;                    // state decimation; diagnostics are per step
    std::vector<double> snapshot_times;      // always captured (nearest step)
    Eigen::VectorXd initial_state;           // empty = zero
};

Trajectory simulate(const GlobalPHModel& model, const InputSignal& input,
                    const SimulateOptions& options);

/// The model after the co-energy state transformation Xt = M X, in which the
/// dynamics read d(Xt)/dt = (J-R) E + G U with E = Q M^{-1} Xt and the output
/// is unchanged. M^{-1} is applied through the block Cholesky factors.
class CoenergyForm {
public:
    explicit CoenergyForm(const GlobalPHModel& model);

    Eigen::VectorXd to_coenergy(const Eigen::VectorXd& state) const;   // Xt = M X
    Eigen::VectorXd from_coenergy(const Eigen::VectorXd& coenergy) const;

    double hamiltonian(const Eigen::VectorXd& coenergy) const;
    Eigen::VectorXd effort(const Eigen::VectorXd& coenergy) const; // Q M^{-1} Xt

    /// Implicit midpoint simulation of the transformed dynamics.
    Trajectory simulate(const InputSignal& input, const SimulateOptions& options) const;

private:
    const GlobalPHModel* model_;
    BlockCholesky mass_;
};

CoenergyForm coenergy_transform(const GlobalPHModel& model);

} // namespace phdg

#endif
