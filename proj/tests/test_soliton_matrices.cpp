#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

#include "susyqm/soliton_matrices.hpp"

using namespace susyqm;

namespace {

unsigned test_seed() {
    if (const char* env = std::getenv("SUSYQM_SEED")) return unsigned(std::strtoul(env, nullptr, 10));
    return 12345u;
}

double superfactorial(int n) {  // prod_{j<n} j!
    double out = 1.0, fact = 1.0;
    for (int j = 1; j < n; ++j) {
        fact *= double(j);
        out *= fact;
    }
    return out;
}

}  // namespace

TEST_CASE("decay-rate sequence validation") {
    GammaSequence g({0.5, 1.0, 2.5});
    CHECK(g.size() == 3);
    CHECK(g[1] == 1.0);
    CHECK_FALSE(g.closed_form());

    CHECK(GammaSequence::consecutive(3).closed_form());
    CHECK(GammaSequence({1.0, 2.0, 3.0}).closed_form());
    CHECK_FALSE(GammaSequence({1.0, 2.5}).closed_form());
    CHECK_FALSE(GammaSequence({2.0, 3.0}).closed_form());

    CHECK_THROWS_AS(GammaSequence(std::vector<double>{}), std::domain_error);
    CHECK_THROWS_AS(GammaSequence({-1.0}), std::domain_error);
    CHECK_THROWS_AS(GammaSequence({0.0, 1.0}), std::domain_error);
    CHECK_THROWS_AS(GammaSequence({1.0, 1.0}), std::domain_error);
    CHECK_THROWS_AS(GammaSequence({2.0, 1.0}), std::domain_error);
    CHECK_THROWS_AS(GammaSequence({1.0, std::numeric_limits<double>::infinity()}),
                    std::domain_error);
    CHECK_THROWS_AS(GammaSequence::consecutive(0), std::domain_error);
}

TEST_CASE("determinant system shifts") {
    GammaSequence g = GammaSequence::consecutive(2);
    CHECK_FALSE(DetSystem::plain(g).shifted());
    DetSystem shifted = DetSystem::half_pi_shifted(g);
    CHECK(shifted.shifted());
    CHECK(shifted.shift.imag() == doctest::Approx(std::numbers::pi / 2).epsilon(1e-15));
    CHECK_THROWS_AS(DetSystem(g, {0.3, 0.0}), std::domain_error);
    CHECK_THROWS_AS(DetSystem(g, {0.0, 1.0}), std::domain_error);
}

TEST_CASE("single-rate matrix is cosh") {
    GammaSequence g({1.0});
    for (double r : {-2.0, 0.0, 1.5}) {
        ScaledMatrix<double> m = build_m(g, r);
        CHECK(std::exp(m.log_scale) * m.matrix(0, 0) ==
              doctest::Approx(std::cosh(r)).epsilon(1e-14));
    }
}

TEST_CASE("scaled entries stay bounded at large separation") {
    GammaSequence g = GammaSequence::consecutive(8);
    for (double r : {-20.0, 20.0}) {
        ScaledMatrix<double> plain = build_m(g, r);
        ScaledMatrix<std::complex<double>> shifted = build_m_shifted(g, r);
        for (int k = 0; k < 8; ++k)
            for (int j = 0; j < 8; ++j) {
                const double cap = std::pow(g[j], k) * (1.0 + 1e-12);
                CHECK(std::abs(plain.matrix(k, j)) <= cap);
                CHECK(std::abs(shifted.matrix(k, j)) <= cap);
            }
    }
}

TEST_CASE("integer-ladder determinant matches the closed form") {
    for (int count = 1; count <= 6; ++count) {
        GammaSequence g = GammaSequence::consecutive(count);
        double worst = 0.0;
        for (int i = 0; i < 50; ++i) {
            const double r = -5.0 + 10.0 * i / 49.0;
            worst = std::max(worst, std::abs(std::expm1(log_abs_det(build_m(g, r)) -
                                                        log_closed_form_det_m(count, r))));
        }
        CAPTURE(count);
        CHECK(worst <= 1e-8);
    }
    // larger ladders accumulate a little more roundoff
    for (int count = 7; count <= 10; ++count) {
        GammaSequence g = GammaSequence::consecutive(count);
        for (double r : {-3.0, 0.5, 4.0})
            CHECK(std::abs(std::expm1(log_abs_det(build_m(g, r)) -
                                      log_closed_form_det_m(count, r))) <= 1e-6);
    }

    CHECK(closed_form_det_m(3, 0.0) == doctest::Approx(16.0).epsilon(1e-14));
    CHECK(closed_form_det_m(2, 0.8) ==
          doctest::Approx(2.0 * std::pow(std::cosh(0.8), 3)).epsilon(1e-14));
    CHECK(std::log(closed_form_det_m(4, 1.1)) ==
          doctest::Approx(log_closed_form_det_m(4, 1.1)).epsilon(1e-13));

    // log route survives arguments whose plain determinant overflows
    CHECK(std::isfinite(log_closed_form_det_m(6, 400.0)));
    CHECK(!std::isfinite(closed_form_det_m(6, 400.0)));

    CHECK_THROWS_AS(closed_form_det_m(0, 1.0), std::domain_error);
    CHECK_THROWS_AS(closed_form_det_m(11, 1.0), std::domain_error);
    CHECK_THROWS_AS(log_closed_form_det_m(0, 1.0), std::domain_error);
    CHECK_THROWS_AS(log_closed_form_det_m(11, 1.0), std::domain_error);
}

TEST_CASE("vandermonde products") {
    CHECK(vandermonde_det({1.0, 2.0, 3.0}) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(vandermonde_det({0.5}) == 1.0);
    for (int n = 2; n <= 8; ++n) {
        std::vector<double> xs(static_cast<size_t>(n), 0.0);
        for (int j = 0; j < n; ++j) xs[size_t(j)] = double(j + 1);
        CHECK(vandermonde_det(xs) == doctest::Approx(superfactorial(n)).epsilon(1e-12));
    }

    std::mt19937 rng(test_seed());
    std::uniform_real_distribution<double> uni(0.5, 5.0);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<double> xs(4);
        for (double& x : xs) x = uni(rng);
        std::sort(xs.begin(), xs.end());
        Eigen::MatrixXd v(4, 4);
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k) v(j, k) = std::pow(xs[size_t(j)], k);
        CHECK(vandermonde_det(xs) == doctest::Approx(lu_det(v)).epsilon(1e-9));
    }
}

TEST_CASE("determinant growth at large separation") {
    // Det M -> e^{sum gamma r} vdm(gamma) / 2^N once every cross term has decayed
    auto deviation = [](const std::vector<double>& gs) {
        GammaSequence g(gs);
        double sum = 0.0;
        for (double v : gs) sum += v;
        const double pred =
            sum * 30.0 + std::log(vandermonde_det(gs)) - double(gs.size()) * std::log(2.0);
        return std::abs(std::expm1(log_abs_det(build_m(g, 30.0)) - pred));
    };
    for (int n = 1; n <= 6; ++n) {
        std::vector<double> ladder(static_cast<size_t>(n), 0.0);
        for (int j = 0; j < n; ++j) ladder[size_t(j)] = double(j + 1);
        CHECK(deviation(ladder) <= 1e-8);
    }
    CHECK(deviation({0.7, 1.9, 3.1}) <= 1e-8);
}

TEST_CASE("shifted determinant modulus follows the sinh closed form") {
    for (int count = 1; count <= 6; ++count) {
        GammaSequence g = GammaSequence::consecutive(count);
        const double pref = 0.5 * double(count) * double(count - 1) * std::log(2.0) +
                            std::log(superfactorial(count));
        for (double r : {0.5, 1.0, 2.0, 3.0}) {
            const double pred =
                pref + 0.5 * double(count) * double(count + 1) * std::log(std::sinh(r));
            CHECK(std::abs(std::expm1(log_abs_det(build_m_shifted(g, r)) - pred)) <= 1e-8);
        }
    }
}

TEST_CASE("log-determinant curvature") {
    DetSystem single = DetSystem::plain(GammaSequence({1.0}));
    CHECK(log_det_second_derivative(single, 0.0) == doctest::Approx(1.0).epsilon(1e-12));

    // five-point differencing of ln Det as an independent oracle
    DetSystem sys = DetSystem::plain(GammaSequence({1.0, 2.5}));
    const double fd = second_log_derivative(
        [&](double x) { return std::exp(log_abs_det(build_m(sys.gamma, x))); }, 1.3, 1e-3);
    CHECK(std::abs(log_det_second_derivative(sys, 1.3) - fd) <= 1e-7);

    for (int count = 1; count <= 6; ++count) {
        DetSystem ladder = DetSystem::plain(GammaSequence::consecutive(count));
        double worst = 0.0;
        for (double r = -5.0; r <= 5.0 + 1e-12; r += 0.25) {
            const double want =
                0.5 * double(count) * double(count + 1) / std::pow(std::cosh(r), 2);
            worst = std::max(worst, std::abs(log_det_second_derivative(ladder, r) - want));
        }
        CAPTURE(count);
        CHECK(worst <= 5e-7);
    }
}

TEST_CASE("shifted curvature reproduces the repulsive core") {
    for (int count = 1; count <= 6; ++count) {
        DetSystem sys = DetSystem::half_pi_shifted(GammaSequence::consecutive(count));
        double worst = 0.0;
        for (double r = 0.75; r <= 5.0 + 1e-12; r += 0.25) {
            const double want = double(count) * double(count + 1) / std::pow(std::sinh(r), 2);
            worst = std::max(worst, std::abs(-2.0 * log_det_second_derivative(sys, r) - want) /
                                        want);
        }
        CAPTURE(count);
        CHECK(worst <= 1e-6);
    }
    CHECK_THROWS_AS(
        log_det_second_derivative(DetSystem::half_pi_shifted(GammaSequence::consecutive(3)), 0.0),
        SingularMatrixError);
}

TEST_CASE("bordered matrix carries the free sinusoid") {
    GammaSequence g = GammaSequence::consecutive(2);
    const double kappa = 1.7, r = 0.9;
    ScaledMatrix<double> d = build_d_scatter(g, kappa, r);
    REQUIRE(d.matrix.rows() == 3);
    REQUIRE(d.matrix.cols() == 3);
    CHECK(d.matrix(0, 2) == doctest::Approx(std::sin(kappa * r)).epsilon(1e-15));
    CHECK(d.matrix(1, 2) == doctest::Approx(kappa * std::cos(kappa * r)).epsilon(1e-15));
    CHECK(d.matrix(2, 2) ==
          doctest::Approx(-kappa * kappa * std::sin(kappa * r)).epsilon(1e-15));
    // soliton columns and their scale agree with the square matrix
    ScaledMatrix<double> m = build_m(g, r);
    CHECK(d.log_scale == m.log_scale);
    CHECK((d.matrix.topLeftCorner(2, 2) - m.matrix).cwiseAbs().maxCoeff() == 0.0);

    ScaledMatrix<std::complex<double>> ds = build_d_scatter_shifted(g, kappa, r);
    CHECK(ds.matrix(1, 2).real() == doctest::Approx(kappa * std::cos(kappa * r)).epsilon(1e-15));
    CHECK(ds.matrix(1, 2).imag() == 0.0);
}
