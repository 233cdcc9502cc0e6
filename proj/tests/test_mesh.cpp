#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "phdg/mesh.hpp"

using namespace phdg;

TEST_CASE("uniform mesh matches the arithmetic progression") {
    const Mesh1D mesh = build_uniform_mesh(-2.0, 3.0, 4);
    REQUIRE(mesh.num_elements() == 4);
    CHECK(mesh.vertex(0) == -2.0);
    CHECK(mesh.vertex(1) == doctest::Approx(-0.75).epsilon(1e-15));
    CHECK(mesh.vertex(2) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(mesh.vertex(3) == doctest::Approx(1.75).epsilon(1e-15));
    CHECK(mesh.vertex(4) == 3.0);
}

TEST_CASE("benchmark mesh: 50 equidistant elements on [0,1]") {
    const Mesh1D mesh = build_uniform_mesh(0.0, 1.0, 50);
    REQUIRE(mesh.vertices().size() == 51);
    for (int i = 0; i < 50; ++i)
        CHECK(mesh.element_width(i) == doctest::Approx(0.02).epsilon(1e-14));
}

TEST_CASE("single element spans the whole domain") {
    const Mesh1D mesh = build_uniform_mesh(0.0, 1.0, 1);
    CHECK(mesh.element_interval(0) == std::pair{0.0, 1.0});
}

TEST_CASE("invalid construction is rejected") {
    CHECK_THROWS_AS(build_uniform_mesh(1.0, 0.0, 3), std::invalid_argument);
    CHECK_THROWS_AS(build_uniform_mesh(0.0, 0.0, 3), std::invalid_argument);
    CHECK_THROWS_AS(build_uniform_mesh(0.0, 1.0, 0), std::invalid_argument);
    CHECK_THROWS_AS(Mesh1D({0.0, 0.5, 0.5, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(Mesh1D({1.0}), std::invalid_argument);
}

TEST_CASE("element index range is enforced") {
    const Mesh1D mesh = build_uniform_mesh(0.0, 1.0, 50);
    CHECK(mesh.element_interval(0).first == 0.0);
    CHECK_THROWS_AS(mesh.element_interval(50), std::out_of_range);
    CHECK_THROWS_AS(mesh.element_interval(-1), std::out_of_range);
}

TEST_CASE("widths sum to the domain length and interfaces are shared values") {
    const double a = -1.7, b = 5.3;
    const Mesh1D mesh = build_uniform_mesh(a, b, 37);

    double total = 0.0;
    for (int i = 0; i < mesh.num_elements(); ++i)
        total += mesh.element_width(i);
    const double eps = std::numeric_limits<double>::epsilon();
    CHECK(std::abs(total - (b - a)) <= 4.0 * eps * std::abs(b - a));

    for (int i = 0; i + 1 < mesh.num_elements(); ++i)
        CHECK(mesh.element_interval(i).second == mesh.element_interval(i + 1).first);
}
