// Command line front end: simulate / spectrum / check over a JSON run config.

#include <CLI11.hpp>
#include <iostream>

#include "phdg/cli.hpp"
#include "phdg/linalg.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Structure-preserving discontinuous Galerkin models of 1-D "
                 "port-Hamiltonian systems of two conservation laws"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir;
    std::string operator_kind = "full";
    bool dump_matrices = false;

    CLI::App* sim = app.add_subcommand(
        "simulate", "Run the implicit midpoint simulation and write CSV diagnostics");
    sim->add_option("--config", config_path, "JSON run configuration")->required();
    sim->add_option("--out", out_dir, "output directory");
    sim->add_flag("--dump-matrices", dump_matrices,
                  "also write M, J, R, G, Q in coordinate format");

    CLI::App* spec = app.add_subcommand(
        "spectrum", "Eigenvalues of the semi-discrete operator");
    spec->add_option("--config", config_path, "JSON run configuration")->required();
    spec->add_option("--out", out_dir, "output directory");
    spec->add_option("--operator", operator_kind,
                     "analyzed operator: 'full' = Minv(J-R)Q, 'structure-only' = MinvJ")
        ->check(CLI::IsMember({"full", "structure-only"}));

    CLI::App* check = app.add_subcommand(
        "check", "Structural and power-balance checks of the assembled model");
    check->add_option("--config", config_path, "JSON run configuration")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        const phdg::RunConfig config = phdg::parse_config_file(config_path);
        if (out_dir.empty())
            out_dir = config.output_dir.empty() ? "out" : config.output_dir;

        if (sim->parsed())
            return phdg::cmd_simulate(config, out_dir, dump_matrices);
        if (spec->parsed())
            return phdg::cmd_spectrum(config, out_dir, operator_kind);
        if (check->parsed())
            return phdg::cmd_check(config, std::cout);
    } catch (const phdg::ConfigError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    } catch (const phdg::NumericalError& err) {
        std::cerr << "numerical error: " << err.what() << "\n";
        return 2;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    }
    return 0;
}
