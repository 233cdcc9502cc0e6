#include "phdg/simulate.hpp"

#include <cmath>
#include <memory>
#include <set>
#include <stdexcept>

namespace phdg {

double hamiltonian(const GlobalPHModel& model, const Eigen::VectorXd& state) {
    if (state.size() != model.n_dof)
        throw std::invalid_argument("hamiltonian: state dimension mismatch");
    return 0.5 * (model.Q * state).dot(model.M * state);
}

MidpointIntegrator::MidpointIntegrator(const GlobalPHModel& model, double dt)
    : model_(&model), dt_(dt) {
    if (!(dt > 0.0))
        throw std::invalid_argument("MidpointIntegrator: dt must be > 0");
    const Eigen::SparseMatrix<double> flow = (model.J - model.R) * model.Q;
    const Eigen::SparseMatrix<double> system = model.M - (0.5 * dt) * flow;
    rhs_matrix_ = model.M + (0.5 * dt) * flow;
    solver_.compute(system);
    if (solver_.info() != Eigen::Success)
        throw NumericalError("MidpointIntegrator: system matrix M - dt/2 (J-R)Q is singular");
}

Eigen::VectorXd MidpointIntegrator::step(const Eigen::VectorXd& state, double t,
                                         const InputSignal& input) const {
    const Eigen::Vector2d u = input(t + 0.5 * dt_);
    Eigen::VectorXd rhs = rhs_matrix_ * state + dt_ * (model_->G * u);
    Eigen::VectorXd next = solver_.solve(rhs);
    if (solver_.info() != Eigen::Success)
        throw NumericalError("MidpointIntegrator: linear solve failed");
    return next;
}

const Eigen::VectorXd& Trajectory::state_at(double t, double tol) const {
    int best = -1;
    double best_dist = tol;
    for (std::size_t i = 0; i < times.size(); ++i) {
        const double dist = std::abs(times[i] - t);
        if (dist <= best_dist) {
            best_dist = dist;
            best = static_cast<int>(i);
        }
    }
    if (best < 0)
        throw std::invalid_argument("Trajectory::state_at: time " + std::to_string(t) +
                                    " was not sampled");
    return states[static_cast<std::size_t>(best)];
}

namespace {

struct StepPlan {
    int n_full = 0;
    bool has_remainder = false;
    double remainder = 0.0;
    int total() const { return n_full + (has_remainder ? 1 : 0); }
    double time_at(int step, double dt, double T) const {
        return (step <= n_full) ? step * dt : T;
    }
};

StepPlan plan_steps(double T, double dt) {
    if (T < 0.0)
        throw std::invalid_argument("simulate: final time must be >= 0");
    if (!(dt > 0.0))
        throw std::invalid_argument("simulate: dt must be > 0");
    StepPlan plan;
    plan.n_full = static_cast<int>(std::floor(T / dt + 1e-9));
    plan.remainder = T - plan.n_full * dt;
    plan.has_remainder = plan.remainder > 1e-9 * dt;
    return plan;
}

// Shared implicit-midpoint driver; the two model forms differ only in the
// one-step map and in how energy/efforts are evaluated.
Trajectory run_midpoint_loop(
    const SimulateOptions& options, int n_dof, const InputSignal& input,
    const Eigen::SparseMatrix<double>& damping, const Eigen::SparseMatrix<double>& input_map,
    const std::function<std::function<Eigen::VectorXd(const Eigen::VectorXd&, double)>(double)>&
        make_step,
    const std::function<double(const Eigen::VectorXd&)>& energy,
    const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& effort) {
    if (options.output_every < 1)
        throw std::invalid_argument("simulate: output_every must be >= 1");

    const StepPlan plan = plan_steps(options.T, options.dt);
    const int n_total = plan.total();

    Eigen::VectorXd state;
    if (options.initial_state.size() == 0)
        state = Eigen::VectorXd::Zero(n_dof);
    else if (options.initial_state.size() == n_dof)
        state = options.initial_state;
    else
        throw std::invalid_argument("simulate: initial state dimension mismatch");

    // Steps at which a state snapshot must be kept.
    std::set<int> capture;
    for (double ts : options.snapshot_times) {
        const int idx = static_cast<int>(std::llround(ts / options.dt));
        if (idx < 0 || idx > n_total ||
            std::abs(plan.time_at(idx, options.dt, options.T) - ts) >
                0.5 * options.dt + 1e-12)
            throw std::invalid_argument("simulate: snapshot time " + std::to_string(ts) +
                                        " is not reachable with this step size");
        capture.insert(idx);
    }

    Trajectory traj;
    traj.hamiltonian_times.reserve(static_cast<std::size_t>(n_total) + 1);
    traj.hamiltonian_trace.reserve(static_cast<std::size_t>(n_total) + 1);

    auto record_state = [&](int step, double t) {
        if (step % options.output_every == 0 || step == n_total || capture.count(step)) {
            traj.times.push_back(t);
            traj.states.push_back(state);
        }
    };

    double energy_n = energy(state);
    traj.hamiltonian_times.push_back(0.0);
    traj.hamiltonian_trace.push_back(energy_n);
    record_state(0, 0.0);

    if (n_total == 0)
        return traj;

    auto stepper = make_step(options.dt);
    std::function<Eigen::VectorXd(const Eigen::VectorXd&, double)> tail_stepper;
    if (plan.has_remainder)
        tail_stepper = make_step(plan.remainder);

    for (int n = 0; n < n_total; ++n) {
        const bool tail = (n == plan.n_full);
        const double h = tail ? plan.remainder : options.dt;
        const double t_n = plan.time_at(n, options.dt, options.T);
        const Eigen::VectorXd next = tail ? tail_stepper(state, t_n) : stepper(state, t_n);

        const Eigen::VectorXd midpoint = 0.5 * (state + next);
        const Eigen::VectorXd effort_mid = effort(midpoint);
        const Eigen::Vector2d u_mid = input(t_n + 0.5 * h);
        const Eigen::Vector2d y_mid = input_map.transpose() * effort_mid;
        const double dissipation = effort_mid.dot(damping * effort_mid);

        const double energy_next = energy(next);
        traj.power_residuals.push_back((energy_next - energy_n) -
                                       h * (y_mid.dot(u_mid) - dissipation));
        traj.output_times.push_back(t_n + 0.5 * h);
        traj.output_trace.push_back(y_mid);

        state = next;
        energy_n = energy_next;
        const double t_next = plan.time_at(n + 1, options.dt, options.T);
        traj.hamiltonian_times.push_back(t_next);
        traj.hamiltonian_trace.push_back(energy_n);
        record_state(n + 1, t_next);
    }
    return traj;
}

} // namespace

Trajectory simulate(const GlobalPHModel& model, const InputSignal& input,
                    const SimulateOptions& options) {
    auto make_step = [&model, &input](double dt) {
        auto integrator = std::make_shared<MidpointIntegrator>(model, dt);
        return std::function<Eigen::VectorXd(const Eigen::VectorXd&, double)>(
            [integrator, &input](const Eigen::VectorXd& x, double t) {
                return integrator->step(x, t, input);
            });
    };
    auto energy = [&model](const Eigen::VectorXd& x) { return hamiltonian(model, x); };
    auto effort = [&model](const Eigen::VectorXd& x) -> Eigen::VectorXd {
        return model.Q * x;
    };
    return run_midpoint_loop(options, model.n_dof, input, model.R, model.G, make_step, energy,
                             effort);
}

CoenergyForm::CoenergyForm(const GlobalPHModel& model)
    : model_(&model), mass_(model.mass_blocks) {
    if (mass_.dim() != model.n_dof)
        throw std::invalid_argument("CoenergyForm: mass blocks do not cover the state space");
}

Eigen::VectorXd CoenergyForm::to_coenergy(const Eigen::VectorXd& state) const {
    return mass_.apply(state);
}

Eigen::VectorXd CoenergyForm::from_coenergy(const Eigen::VectorXd& coenergy) const {
    return mass_.solve(coenergy);
}

double CoenergyForm::hamiltonian(const Eigen::VectorXd& coenergy) const {
    return 0.5 * coenergy.dot(effort(coenergy));
}

Eigen::VectorXd CoenergyForm::effort(const Eigen::VectorXd& coenergy) const {
    return model_->Q * mass_.solve(coenergy);
}

Trajectory CoenergyForm::simulate(const InputSignal& input, const SimulateOptions& options) const {
    const GlobalPHModel& model = *model_;
    const Eigen::SparseMatrix<double> flow = (model.J - model.R) * model.Q;

    // Midpoint step of d(Xt)/dt = flow M^{-1} Xt + G U, solved through the
    // substitution Xt_{n+1} = M Z:
    //   (M - dt/2 flow) Z = Xt_n + dt/2 flow M^{-1} Xt_n + dt G u_mid.
    auto make_step = [this, &model, &input, flow](double dt) {
        const Eigen::SparseMatrix<double> system = model.M - (0.5 * dt) * flow;
        auto solver = std::make_shared<Eigen::SparseLU<Eigen::SparseMatrix<double>>>();
        solver->compute(system);
        if (solver->info() != Eigen::Success)
            throw NumericalError("CoenergyForm: system matrix is singular");
        return std::function<Eigen::VectorXd(const Eigen::VectorXd&, double)>(
            [this, solver, &model, &input, flow, dt](const Eigen::VectorXd& xt, double t) {
                const Eigen::Vector2d u = input(t + 0.5 * dt);
                Eigen::VectorXd rhs =
                    xt + (0.5 * dt) * (flow * mass_.solve(xt)) + dt * (model.G * u);
                Eigen::VectorXd z = solver->solve(rhs);
                if (solver->info() != Eigen::Success)
                    throw NumericalError("CoenergyForm: linear solve failed");
                return mass_.apply(z);
            });
    };
    auto energy = [this](const Eigen::VectorXd& xt) { return hamiltonian(xt); };
    auto effort_fn = [this](const Eigen::VectorXd& xt) { return effort(xt); };

    SimulateOptions transformed = options;
    if (options.initial_state.size() != 0)
        transformed.initial_state = to_coenergy(options.initial_state);
    return run_midpoint_loop(transformed, model.n_dof, input, model.R, model.G, make_step,
                             energy, effort_fn);
}

CoenergyForm coenergy_transform(const GlobalPHModel& model) {
    return CoenergyForm(model);
}

} // namespace phdg
