#include <doctest.h>

#include <stdexcept>

#include <random>

#include "phdg/flux.hpp"

using namespace phdg;

TEST_CASE("presets map to the documented parameter triples") {
    const FluxParams central = flux_preset("central");
    CHECK(central.beta == 0.5);
    CHECK(central.tau == 0.0);
    CHECK(central.xi == 0.0);
    CHECK(central.is_conservative());

    const FluxParams upwind = flux_preset("upwind_left");
    CHECK(upwind.beta == 0.0);
    CHECK(upwind.is_conservative());
    CHECK(flux_preset("upwind_right").beta == 1.0);

    const FluxParams damped = flux_preset("damped_central(0.5)");
    CHECK(damped.beta == 0.5);
    CHECK(damped.tau == 0.5);
    CHECK(damped.xi == 0.5);
    CHECK_FALSE(damped.is_conservative());

    const FluxParams lax = flux_preset("lax_friedrichs(0.25)");
    CHECK(lax.beta == 0.5);
    CHECK(lax.tau == 0.25);
    CHECK(lax.xi == 0.25);

    CHECK_THROWS_AS(flux_preset("romberg"), std::invalid_argument);
    CHECK_THROWS_AS(flux_preset("damped_central(-1)"), std::invalid_argument);
    CHECK_THROWS_AS(flux_preset("damped_central()"), std::invalid_argument);
    CHECK_THROWS_AS(flux_preset("lax_friedrichs(abc)"), std::invalid_argument);
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(validate(FluxParams{1.5, 0.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(validate(FluxParams{-0.1, 0.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(validate(FluxParams{0.5, -1.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(validate(FluxParams{0.5, 0.0, -1.0}), std::invalid_argument);
    CHECK_NOTHROW(validate(FluxParams{0.0, 0.0, 0.0}));
    CHECK_NOTHROW(validate(FluxParams{1.0, 2.0, 3.0}));
}

TEST_CASE("direct substitution examples") {
    const InterfaceFlux a = interface_flux(flux_preset("central"), 1.0, 0.0, 0.0, 0.0);
    CHECK(a.e1_star == 0.5);
    CHECK(a.e2_star == 0.0);

    const InterfaceFlux b = interface_flux({0.5, 0.5, 0.5}, 0.0, 0.0, 1.0, -1.0);
    CHECK(b.e1_star == doctest::Approx(1.0).epsilon(1e-15)); // 0 + tau * (1 - (-1))
    CHECK(b.e2_star == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("consistency: equal traces pass through unchanged for any parameters") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> value(-5.0, 5.0);

    for (int trial = 0; trial < 200; ++trial) {
        const FluxParams params{unit(rng), 2.0 * unit(rng), 2.0 * unit(rng)};
        const double v = value(rng);
        const double w = value(rng);
        const InterfaceFlux flux = interface_flux(params, v, v, w, w);
        CHECK(flux.e1_star == doctest::Approx(v).epsilon(1e-13));
        CHECK(flux.e2_star == doctest::Approx(w).epsilon(1e-13));
    }
}
