#ifndef PHDG_CONFIG_HPP
#define PHDG_CONFIG_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "phdg/assembly.hpp"
#include "phdg/flux.hpp"
#include "phdg/simulate.hpp"

namespace phdg {

/// Raised for invalid run configurations. Maps to CLI exit code 1.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// One JSON document describing a run. Unknown keys are rejected so that
/// typos in parameter names cannot silently fall back to defaults.
struct RunConfig {
    double mesh_a = 0.0;
    double mesh_b = 1.0;
    int mesh_n = 1;

    int k1 = 1;
    int k2 = 1;

    double c1 = 1.0;
    double c2 = 1.0;

    FluxParams flux;
    std::string flux_label; // preset name or "beta=..,tau=..,xi=.."

    BoundaryConditions bc;

    std::string u1_spec = "zero";
    std::string u2_spec = "zero";

    double T = 1.0;
    double dt = 1e-3;
    int output_every = 1;

    std::vector<double> snapshot_times;
    std::string output_dir; // optional; the CLI --out flag overrides

    InputSignal input() const;
    GlobalPHModel build_model() const;
    SimulateOptions simulate_options() const;
};

/// Parses and fully validates a config document; error messages name the
/// offending field.
RunConfig parse_config_text(const std::string& json_text);
RunConfig parse_config_file(const std::string& path);

/// Built-in signal names: "paper_pulse", "zero", "constant:<v>",
/// "sine:<amp>:<freq>:<t_off>".
std::function<double(double)> parse_signal(const std::string& spec);

} // namespace phdg

#endif
