#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <limits>

#include "reference.hpp"
#include "susyqm/special_functions.hpp"

using namespace susyqm;

TEST_CASE("core polynomial matches hand expansions") {
    // (d/dz)^{n+m} (1-z^2)^n / (2^n n!)
    PolyCoeffs<double> c21 = legendre_core_polynomial({2, 1});
    REQUIRE(c21.size() == 2);
    CHECK(c21[0] == 0.0);
    CHECK(c21[1] == 3.0);

    PolyCoeffs<double> c22 = legendre_core_polynomial({2, 2});
    REQUIRE(c22.size() == 1);
    CHECK(c22[0] == 3.0);

    PolyCoeffs<double> c10 = legendre_core_polynomial({1, 0});
    REQUIRE(c10.size() == 2);
    CHECK(c10[0] == 0.0);
    CHECK(c10[1] == -1.0);

    CHECK(poly_eval(c21, 0.25) == doctest::Approx(0.75).epsilon(1e-15));
}

TEST_CASE("inside evaluation against the recurrence oracle") {
    for (int l = 0; l <= 12; ++l)
        for (int m = 0; m <= l; ++m) {
            double worst = 0.0;
            for (int i = 0; i < 200; ++i) {
                const double z = -0.995 + 0.01 * i;
                const double got = legendre_inside({l, m}, z);
                const double want = testref::legendre_inside(l, m, z);
                worst = std::max(worst, std::abs(got - want) / std::max(1.0, std::abs(want)));
            }
            CAPTURE(l);
            CAPTURE(m);
            CHECK(worst <= 1e-10);
        }
}

TEST_CASE("outside evaluation against the recurrence oracle") {
    for (int l = 0; l <= 12; ++l)
        for (int m = 0; m <= l; ++m) {
            double worst = 0.0;
            for (double y = 1.001; y <= 3.0; y += 0.05) {
                const double got = legendre_outside({l, m}, y);
                const double want = testref::legendre_outside(l, m, y);
                worst = std::max(worst, std::abs(got - want) / std::max(1.0, std::abs(want)));
            }
            CAPTURE(l);
            CAPTURE(m);
            CHECK(worst <= 1e-10);
        }
}

TEST_CASE("frozen spot values") {
    CHECK(legendre_inside({5, 3}, 0.4) ==
          doctest::Approx(17.78405975698462389756689).epsilon(1e-14));
    CHECK(legendre_outside({5, 3}, 1.3) ==
          doctest::Approx(427.5894856460085186410430).epsilon(1e-14));
    CHECK(legendre_inside({0, 0}, 0.37) == 1.0);
    CHECK(legendre_inside({1, 1}, 0.6) == doctest::Approx(0.8).epsilon(1e-15));
}

TEST_CASE("parity in z") {
    for (int l = 0; l <= 8; ++l)
        for (int m = 0; m <= l; ++m)
            for (double z : {0.3, 0.7}) {
                const double sign = ((l + m) % 2 == 0) ? 1.0 : -1.0;
                CHECK(legendre_inside({l, m}, -z) == sign * legendre_inside({l, m}, z));
            }
}

TEST_CASE("derivative matches a five-point difference quotient") {
    const double h = 1e-4;
    for (int l : {3, 6, 12})
        for (int m : {1, 2})
            for (double z : {-0.6, 0.1, 0.8}) {
                auto f = [&](double x) { return legendre_inside({l, m}, x); };
                const double fd =
                    (f(z - 2 * h) - 8 * f(z - h) + 8 * f(z + h) - f(z + 2 * h)) / (12 * h);
                const double got = legendre_inside_derivative({l, m}, z);
                CHECK(std::abs(got - fd) <= 1e-7 * std::max(1.0, std::abs(fd)));
            }
}

TEST_CASE("complex evaluation restricts to the real interval") {
    for (int l : {2, 5, 9})
        for (int m : {0, 1, 3})
            for (double z : {-0.8, 0.05, 0.6}) {
                if (m > l) continue;
                const std::complex<double> w = legendre_complex({l, m}, {z, 0.0});
                CHECK(w.imag() == 0.0);
                CHECK(w.real() ==
                      doctest::Approx(legendre_inside({l, m}, z)).epsilon(1e-14));
            }
    // off the interval but off the cut
    const std::complex<double> at_i = legendre_complex({2, 2}, {0.0, 1.0});
    CHECK(at_i.real() == doctest::Approx(6.0).epsilon(1e-14));
    CHECK(std::abs(at_i.imag()) <= 1e-14);
}

TEST_CASE("branch cut is rejected, its neighbourhood is not") {
    CHECK_THROWS_AS(legendre_complex({3, 1}, {1.5, 0.0}), std::domain_error);
    CHECK_THROWS_AS(legendre_complex({3, 1}, {-2.0, 0.0}), std::domain_error);
    CHECK_THROWS_AS(legendre_complex({3, 1}, {1.0, 0.0}), std::domain_error);
    CHECK_NOTHROW(legendre_complex({3, 1}, {1.5, 1e-12}));
    CHECK_NOTHROW(legendre_complex({3, 1}, {0.999, 0.0}));
}

TEST_CASE("degree and order validation") {
    CHECK_THROWS_AS(LegendreOrder(-1, 0), std::domain_error);
    CHECK_THROWS_AS(LegendreOrder(2, 3), std::domain_error);
    CHECK_THROWS_AS(LegendreOrder(2, -1), std::domain_error);
    CHECK_THROWS_AS(legendre_inside({2, 1}, 1.0), std::domain_error);
    CHECK_THROWS_AS(legendre_inside({2, 1}, -1.2), std::domain_error);
    CHECK_THROWS_AS(legendre_inside_derivative({2, 1}, 1.0), std::domain_error);
    CHECK_THROWS_AS(legendre_outside({2, 1}, 1.0), std::domain_error);
    CHECK_THROWS_AS(legendre_outside({2, 1}, 0.5), std::domain_error);
}

TEST_CASE("double factorial") {
    CHECK(double_factorial(-1) == 1);
    CHECK(double_factorial(0) == 1);
    CHECK(double_factorial(1) == 1);
    CHECK(double_factorial(5) == 15);
    CHECK(double_factorial(8) == 384);
    CHECK(double_factorial(33) == 6332659870762850625ULL);
    CHECK_THROWS_AS(double_factorial(-2), std::domain_error);
    CHECK_THROWS_AS(double_factorial(34), std::overflow_error);
}

TEST_CASE("bound-state normalizer values") {
    CHECK(bound_state_normalizer(1, 1) == doctest::Approx(std::sqrt(1.0 / 3.0)).epsilon(1e-15));
    CHECK(bound_state_normalizer(2, 1) ==
          doctest::Approx(0.316227766016837933199889).epsilon(1e-15));
    CHECK(bound_state_normalizer(2, 2) ==
          doctest::Approx(0.0345032779671177108898063).epsilon(1e-15));
    for (int n = 1; n <= 6; ++n)
        for (int j = 1; j <= n; ++j) CHECK(bound_state_normalizer(n, j) > 0.0);
    CHECK_THROWS_AS(bound_state_normalizer(2, 3), std::domain_error);
    CHECK_THROWS_AS(bound_state_normalizer(0, 1), std::domain_error);
    CHECK_THROWS_AS(bound_state_normalizer(2, 0), std::domain_error);
}

TEST_CASE("ground-state normalizer values") {
    CHECK(ground_state_normalizer(1) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
    // sqrt(15/16)
    CHECK(ground_state_normalizer(3) == doctest::Approx(std::sqrt(15.0) / 4.0).epsilon(1e-15));
    CHECK_THROWS_AS(ground_state_normalizer(0), std::domain_error);
}
