#ifndef PHDG_FLUX_HPP
#define PHDG_FLUX_HPP

#include <string>
#include <string_view>

namespace phdg {

/// Parameters of the interface flux family: an averaging weight beta in [0,1]
/// and two jump penalties tau, xi >= 0. tau = xi = 0 gives a conservative
/// (power-preserving) interconnection; positive penalties introduce numerical
/// damping.
struct FluxParams {
    double beta = 0.5;
    double tau = 0.0;
    double xi = 0.0;

    bool is_conservative() const { return tau == 0.0 && xi == 0.0; }
};

/// Throws std::invalid_argument unless 0 <= beta <= 1 and tau, xi >= 0.
void validate(const FluxParams& params);

/// Named presets. Accepted names: "central", "upwind_left", "upwind_right",
/// "lax_friedrichs(<c>)", "damped_central(<c>)" with c > 0.
FluxParams flux_preset(std::string_view name);

struct InterfaceFlux {
    double e1_star;
    double e2_star;
};

/// Single-valued interface efforts from the traces of the two adjacent
/// elements; "left"/"right" is the element on the smaller/larger coordinate
/// side of the interface.
///
///   e1* = (1-beta) e1_left + beta e1_right + tau (e2_left - e2_right)
///   e2* = beta e2_left + (1-beta) e2_right + xi (e1_left - e1_right)
InterfaceFlux interface_flux(const FluxParams& params, double e1_left, double e1_right,
                             double e2_left, double e2_right);

} // namespace phdg

#endif
