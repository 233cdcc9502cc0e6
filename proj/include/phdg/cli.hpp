#ifndef PHDG_CLI_HPP
#define PHDG_CLI_HPP

#include <iosfwd>
#include <string>

#include "phdg/config.hpp"

namespace phdg {

/// Runs the time simulation and writes hamiltonian.csv, outputs.csv,
/// power_residual.csv and one snapshot_<t>.csv per requested snapshot.
/// With dump_matrices, also writes M, J, R, G, Q in coordinate format.
int cmd_simulate(const RunConfig& config, const std::string& out_dir, bool dump_matrices);

/// Writes eigenvalues.csv (re,im, sorted) and spectrum_summary.txt.
/// operator_kind is "full" (M^{-1}(J-R)Q) or "structure-only" (M^{-1}J).
int cmd_spectrum(const RunConfig& config, const std::string& out_dir,
                 const std::string& operator_kind);

/// Prints the structural report and the randomized power-balance identity
/// check; returns 0 iff everything passes.
int cmd_check(const RunConfig& config, std::ostream& out);

} // namespace phdg

#endif
