#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <random>

#include "phdg/basis.hpp"

using namespace phdg;

TEST_CASE("linear basis is the pair of unique linear interpolants") {
    const ReferenceBasis basis(1);
    REQUIRE(basis.size() == 2);
    CHECK(basis.nodes()[0] == 0.0);
    CHECK(basis.nodes()[1] == 1.0);

    const Eigen::VectorXd at_quarter = basis.eval(0.25);
    CHECK(at_quarter[0] == doctest::Approx(0.75).epsilon(1e-15));
    CHECK(at_quarter[1] == doctest::Approx(0.25).epsilon(1e-15));

    const Eigen::VectorXd at_zero = basis.eval(0.0);
    CHECK(at_zero[0] == 1.0);
    CHECK(at_zero[1] == 0.0);

    for (double zeta : {0.0, 0.3, 0.77, 1.0}) {
        const Eigen::VectorXd d = basis.eval_deriv(zeta);
        CHECK(d[0] == doctest::Approx(-1.0).epsilon(1e-14));
        CHECK(d[1] == doctest::Approx(1.0).epsilon(1e-14));
    }
}

TEST_CASE("quadratic basis: nodes, Kronecker property, analytic derivatives") {
    const ReferenceBasis basis(2);
    REQUIRE(basis.size() == 3);
    CHECK(basis.nodes()[1] == doctest::Approx(0.5).epsilon(1e-15));

    const Eigen::VectorXd mid = basis.eval(0.5);
    CHECK(mid[0] == 0.0);
    CHECK(mid[1] == 1.0);
    CHECK(mid[2] == 0.0);

    // l0' = 4z-3, l1' = -8z+4, l2' = 4z-1 on the equidistant nodes {0,1/2,1}
    const Eigen::VectorXd d0 = basis.eval_deriv(0.0);
    CHECK(d0[0] == doctest::Approx(-3.0).epsilon(1e-13));
    CHECK(d0[1] == doctest::Approx(4.0).epsilon(1e-13));
    CHECK(d0[2] == doctest::Approx(-1.0).epsilon(1e-13));
}

TEST_CASE("Lobatto interior nodes match their closed forms for k = 3, 4") {
    const ReferenceBasis cubic(3);
    CHECK(cubic.nodes()[1] ==
          doctest::Approx(0.5 * (1.0 - 1.0 / std::sqrt(5.0))).epsilon(1e-15));
    CHECK(cubic.nodes()[2] ==
          doctest::Approx(0.5 * (1.0 + 1.0 / std::sqrt(5.0))).epsilon(1e-15));

    const ReferenceBasis quartic(4);
    CHECK(quartic.nodes()[1] ==
          doctest::Approx(0.5 * (1.0 - std::sqrt(3.0 / 7.0))).epsilon(1e-15));
    CHECK(quartic.nodes()[2] == 0.5);
    CHECK(quartic.nodes()[3] ==
          doctest::Approx(0.5 * (1.0 + std::sqrt(3.0 / 7.0))).epsilon(1e-15));
}

TEST_CASE("degree 0 is rejected, evaluation outside [0,1] is rejected") {
    CHECK_THROWS_AS(reference_basis(0), std::invalid_argument);
    const ReferenceBasis basis(2);
    CHECK_THROWS_AS(basis.eval(-0.01), std::domain_error);
    CHECK_THROWS_AS(basis.eval(1.01), std::domain_error);
}

TEST_CASE("Kronecker, partition of unity and derivative sum for k <= 8") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    for (int k = 1; k <= 8; ++k) {
        const ReferenceBasis basis(k);

        for (int j = 0; j < basis.size(); ++j) {
            const Eigen::VectorXd at_node = basis.eval(basis.nodes()[j]);
            for (int m = 0; m < basis.size(); ++m)
                CHECK(std::abs(at_node[m] - (m == j ? 1.0 : 0.0)) < 1e-12);
        }

        for (int trial = 0; trial < 100; ++trial) {
            const double zeta = unit(rng);
            CHECK(std::abs(basis.eval(zeta).sum() - 1.0) < 1e-12);
            CHECK(std::abs(basis.eval_deriv(zeta).sum()) < 1e-12);
        }
    }
}

TEST_CASE("Gauss rules: midpoint, two-point, exactness on monomials") {
    const QuadratureRule one = gauss_rule(1);
    CHECK(one.points[0] == 0.5);
    CHECK(one.weights[0] == doctest::Approx(1.0).epsilon(1e-15));

    const QuadratureRule two = gauss_rule(2);
    const double offset = 0.5 / std::sqrt(3.0);
    CHECK(two.points[0] == doctest::Approx(0.5 - offset).epsilon(1e-15));
    CHECK(two.points[1] == doctest::Approx(0.5 + offset).epsilon(1e-15));
    CHECK(two.weights[0] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(two.weights[1] == doctest::Approx(0.5).epsilon(1e-15));

    // n = 3 integrates zeta^5 exactly: integral over [0,1] is 1/6.
    const QuadratureRule three = gauss_rule(3);
    double integral = 0.0;
    for (int q = 0; q < 3; ++q)
        integral += three.weights[q] * std::pow(three.points[q], 5);
    CHECK(std::abs(integral - 1.0 / 6.0) < 1e-15);

    CHECK_THROWS_AS(gauss_rule(0), std::invalid_argument);
}

TEST_CASE("rule of n points is exact up to degree 2n-1 and weights sum to 1") {
    for (int n = 1; n <= 10; ++n) {
        const QuadratureRule rule = gauss_rule(n);
        CHECK(std::abs(rule.weights.sum() - 1.0) < 1e-13);
        for (int p = 0; p <= 2 * n - 1; ++p) {
            double integral = 0.0;
            for (int q = 0; q < n; ++q)
                integral += rule.weights[q] * std::pow(rule.points[q], p);
            CHECK(std::abs(integral - 1.0 / (p + 1)) < 1e-13);
        }
    }
}

namespace {

// Independent mass-matrix oracle: expand each Lagrange polynomial in the
// monomial basis through a Vandermonde solve, multiply coefficient vectors,
// and integrate monomials analytically.
Eigen::MatrixXd monomial_mass_matrix(const ReferenceBasis& basis) {
    const int n = basis.size();
    Eigen::MatrixXd vandermonde(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            vandermonde(i, j) = std::pow(basis.nodes()[i], j);
    // Column j of coeffs holds the monomial coefficients of l_j.
    const Eigen::MatrixXd coeffs =
        vandermonde.fullPivLu().solve(Eigen::MatrixXd::Identity(n, n));

    Eigen::MatrixXd mass(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double value = 0.0;
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    value += coeffs(a, i) * coeffs(b, j) / (a + b + 1.0);
            mass(i, j) = value;
        }
    return mass;
}

} // namespace

TEST_CASE("quadrature mass matrix equals the analytically integrated one for k <= 3") {
    for (int k = 1; k <= 3; ++k) {
        const ReferenceBasis basis(k);
        const QuadratureRule rule = gauss_rule(k + 1);

        Eigen::MatrixXd quad_mass = Eigen::MatrixXd::Zero(basis.size(), basis.size());
        for (int q = 0; q < rule.size(); ++q) {
            const Eigen::VectorXd values = basis.eval(rule.points[q]);
            quad_mass += rule.weights[q] * values * values.transpose();
        }

        const Eigen::MatrixXd exact = monomial_mass_matrix(basis);
        CHECK((quad_mass - exact).cwiseAbs().maxCoeff() < 1e-13);
    }
}
