#include "phdg/flux.hpp"

#include <charconv>
#include <stdexcept>

namespace phdg {

void validate(const FluxParams& params) {
    if (!(params.beta >= 0.0 && params.beta <= 1.0))
        throw std::invalid_argument("FluxParams: beta must lie in [0,1], got " +
                                    std::to_string(params.beta));
    if (!(params.tau >= 0.0))
        throw std::invalid_argument("FluxParams: tau must be >= 0, got " +
                                    std::to_string(params.tau));
    if (!(params.xi >= 0.0))
        throw std::invalid_argument("FluxParams: xi must be >= 0, got " +
                                    std::to_string(params.xi));
}

namespace {

// Parses "name(c)" into its constant; returns false if `name` has no
// parenthesized argument of that form.
bool parse_parameterized(std::string_view text, std::string_view name, double& c) {
    if (text.size() < name.size() + 3 || text.substr(0, name.size()) != name)
        return false;
    if (text[name.size()] != '(' || text.back() != ')')
        return false;
    const std::string_view arg = text.substr(name.size() + 1, text.size() - name.size() - 2);
    const char* first = arg.data();
    const char* last = arg.data() + arg.size();
    auto [ptr, ec] = std::from_chars(first, last, c);
    return ec == std::errc{} && ptr == last;
}

} // namespace

FluxParams flux_preset(std::string_view name) {
    if (name == "central")
        return {0.5, 0.0, 0.0};
    if (name == "upwind_left")
        return {0.0, 0.0, 0.0};
    if (name == "upwind_right")
        return {1.0, 0.0, 0.0};

    double c = 0.0;
    if (parse_parameterized(name, "lax_friedrichs", c) ||
        parse_parameterized(name, "damped_central", c)) {
        if (!(c > 0.0))
            throw std::invalid_argument("flux_preset: penalty constant must be > 0 in '" +
                                        std::string(name) + "'");
        return {0.5, c, c};
    }
    throw std::invalid_argument("flux_preset: unknown preset '" + std::string(name) + "'");
}

InterfaceFlux interface_flux(const FluxParams& params, double e1_left, double e1_right,
                             double e2_left, double e2_right) {
    const double b = params.beta;
    return {
        (1.0 - b) * e1_left + b * e1_right + params.tau * (e2_left - e2_right),
        b * e2_left + (1.0 - b) * e2_right + params.xi * (e1_left - e1_right),
    };
}

} // namespace phdg
