#include "susyqm/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "susyqm/phase_equiv.hpp"
#include "susyqm/potentials_spectra.hpp"
#include "susyqm/scattering.hpp"
#include "susyqm/soliton_matrices.hpp"

namespace susyqm {

namespace {

constexpr double kPi = std::numbers::pi;

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

VerificationReport finish(const RunConfig& config, std::string name,
                          std::map<std::string, double> params, std::string grid,
                          double max_abs_error, double default_tol, Clock::time_point start) {
    VerificationReport report;
    report.check_name = std::move(name);
    report.params = std::move(params);
    report.grid = std::move(grid);
    report.max_abs_error = max_abs_error;
    report.tolerance = config.tolerance_for(report.check_name, default_tol);
    report.passed = std::isfinite(max_abs_error) && max_abs_error <= report.tolerance;
    report.runtime_ms = elapsed_ms(start);
    return report;
}

VerificationReport check_eq10_complex_shift(const RunConfig& config) {
    const auto start = Clock::now();
    const int n_max = std::min(config.n_max, 3);
    double worst = 0.0;
    for (int n = 1; n <= n_max; ++n)
        for (int j = 1; j <= n; ++j) {
            const ComplexShiftCheck check = complex_shift_check(n, j, 1.5);
            const std::complex<double> expected{0.0, (j % 2 == 0) ? -1.0 : 1.0};
            worst = std::max(worst, std::abs(check.modulus_ratio - 1.0));
            worst = std::max(worst, std::abs(check.fitted_phase - expected));
        }
    return finish(config, "eq10_complex_shift", {{"n_max", double(n_max)}},
                  "r in {0.5,1.0,...,4.0}", worst, 1e-10, start);
}

VerificationReport check_eq13_potential(const RunConfig& config) {
    const auto start = Clock::now();
    const int count_max = 8;
    double worst = 0.0;
    for (int count = 1; count <= count_max; ++count) {
        const PotentialModel model =
            PotentialModel::determinant_built(DetSystem::plain(GammaSequence::consecutive(count)));
        for (double r = 0.0; r <= 10.0 + 1e-12; r += 0.1) {
            const double closed =
                -double(count) * double(count + 1) / (std::cosh(r) * std::cosh(r));
            worst = std::max(worst, std::abs(potential_value(model, r) - closed));
        }
    }
    return finish(config, "eq13_potential", {{"count_max", double(count_max)}},
                  "r in [0,10] step 0.1", worst, 1e-6, start);
}

VerificationReport check_eq14_identity(const RunConfig& config) {
    const auto start = Clock::now();
    const int count_max = 10;
    double worst = 0.0;
    for (int count = 1; count <= count_max; ++count)
        for (int i = 0; i < 200; ++i) {
            const double z = -0.995 + 0.01 * i;
            const double lhs = eigenstate_sum_potential(count, z);
            const double rhs = -double(count) * double(count + 1) * (1.0 - z * z);
            worst = std::max(worst, std::abs(lhs - rhs));
        }
    return finish(config, "eq14_identity", {{"count_max", double(count_max)}},
                  "200 z-points in (-1,1)", worst, 1e-9, start);
}

VerificationReport check_eq18_asymptotics(const RunConfig& config) {
    const auto start = Clock::now();
    const int n_max = std::min(config.n_max, 3);
    const double r = 30.0;
    double worst = 0.0;
    for (int n = 1; n <= n_max; ++n) {
        const DetSystem sys = DetSystem::plain(GammaSequence::consecutive(2 * n));
        const Eigen::VectorXd kappas = config.kappa.values();
        for (Eigen::Index i = 0; i < kappas.size(); ++i) {
            const double direct = scatter_state_det(sys, kappas[i], r);
            const double closed = asymptotic_scatter_form(n, kappas[i], r);
            worst = std::max(worst, std::abs(direct - closed) / std::abs(closed));
        }
    }
    return finish(config, "eq18_asymptotics",
                  {{"n_max", double(n_max)}, {"r", r}, {"kappa_count", double(config.kappa.count)}},
                  "kappa grid at r = 30", worst, 1e-6, start);
}

VerificationReport check_eq19_levinson(const RunConfig& config) {
    const auto start = Clock::now();
    const double kappa = 1e-4;
    double worst = 0.0;
    for (int n = 1; n <= config.n_max; ++n) {
        worst = std::max(worst, std::abs(det_phase_shift(n, kappa) - double(n) * kPi));
        worst = std::max(worst, std::abs(det_phase_shift(n, kappa, true)));
    }
    return finish(config, "eq19_levinson", {{"n_max", double(config.n_max)}, {"kappa", kappa}},
                  "kappa -> 0 limit", worst, 1e-2, start);
}

VerificationReport check_eq22_phase_equivalence(const RunConfig& config) {
    const auto start = Clock::now();
    const Eigen::VectorXd kappas = config.kappa.values();
    double worst = 0.0;
    for (int n = 1; n <= config.n_max; ++n) {
        const PhaseShiftCurve deep =
            phase_shift_curve(n, false, PhaseRoute::DeterminantRatio, kappas);
        const PhaseShiftCurve singular =
            phase_shift_curve(n, true, PhaseRoute::DeterminantRatio, kappas);
        for (Eigen::Index i = 0; i < kappas.size(); ++i)
            worst = std::max(worst,
                             std::abs(deep.deltas[i] - singular.deltas[i] - double(n) * kPi));
    }
    return finish(config, "eq22_phase_equivalence",
                  {{"n_max", double(config.n_max)},
                   {"kappa_min", config.kappa.min},
                   {"kappa_max", config.kappa.max}},
                  "kappa grid", worst, 1e-6, start);
}

VerificationReport check_eq23_singular_reconstruction(const RunConfig& config) {
    const auto start = Clock::now();
    double worst = 0.0;
    for (int n = 1; n <= config.n_max; ++n)
        for (double r = 0.2; r <= 8.0 + 1e-12; r += 0.2) {
            const double s = std::sinh(r);
            const double exact = 2.0 * double(n) * double(2 * n + 1) / (s * s);
            worst = std::max(worst, std::abs(singular_from_deep(n, r) - exact));
        }
    return finish(config, "eq23_singular_reconstruction", {{"n_max", double(config.n_max)}},
                  "r in [0.2,8] step 0.2", worst, 1e-5, start);
}

VerificationReport check_eq24_partner_solve(const RunConfig& config) {
    const auto start = Clock::now();
    double worst = 0.0;
    for (int n = 1; n <= config.n_max; ++n)
        for (double r : {0.05, 0.1, 0.2, 0.5, 1.0, 1.5, 2.0, 3.0, 4.0, 6.0, 8.0, 10.0}) {
            const Eigen::VectorXd solved = partner_states_solve(n, r);
            for (int j = 1; j <= n; ++j) {
                const double closed = partner_state(n, j, r);
                worst = std::max(worst,
                                 std::abs(solved[j - 1] - closed) / std::abs(closed));
            }
        }
    return finish(config, "eq24_partner_solve", {{"n_max", double(config.n_max)}},
                  "r in [0.05,10]", worst, 1e-8, start);
}

VerificationReport check_eq25_logdet(const RunConfig& config) {
    const auto start = Clock::now();
    double worst = 0.0;
    for (int n = 1; n <= config.n_max; ++n)
        for (double r = 0.2; r <= 8.0 + 1e-12; r += 0.2)
            worst = std::max(worst, logdet_derivative_identity(n, r));
    return finish(config, "eq25_logdet", {{"n_max", double(config.n_max)}},
                  "r in [0.2,8] step 0.2", worst, 1e-6, start);
}

VerificationReport check_eq26_27_identity(const RunConfig& config) {
    const auto start = Clock::now();
    const int n_max = 5;
    double worst = 0.0;
    for (int n = 1; n <= n_max; ++n) {
        for (double r = 0.5; r <= 5.0 + 1e-12; r += 0.1) {
            const IdentitySides sides = product_sum_identity(n, r);
            worst = std::max(worst, std::abs(sides.lhs - sides.rhs) / std::abs(sides.rhs));
        }
        for (int i = 0; i < 200; ++i) {
            const double z = 0.0025 + 0.005 * i;
            const IdentitySides sides = legendre_product_identity(n, z);
            worst = std::max(worst, std::abs(sides.lhs - sides.rhs) / std::abs(sides.rhs));
        }
    }
    return finish(config, "eq26_27_identity", {{"n_max", double(n_max)}},
                  "200 z-points in (0,1); r in [0.5,5]", worst, 1e-9, start);
}

VerificationReport check_eq36_37_transform(const RunConfig& config) {
    const auto start = Clock::now();
    const int n_max = std::min(config.n_max, 2);
    double worst = 0.0;
    for (int n = 1; n <= n_max; ++n)
        for (double kappa : {0.5, 1.0, 2.0})
            for (double r : {1.0, 2.0, 3.0}) {
                worst = std::max(worst,
                                 general_wavefunction_transform(n, kappa, r).relative_deviation);
                worst = std::max(worst, wavefunction_relation_check(n, kappa, r));
            }
    return finish(config, "eq36_37_transform", {{"n_max", double(n_max)}},
                  "kappa in {0.5,1,2}; r in {1,2,3}", worst, 1e-6, start);
}

VerificationReport check_eq39_integral(const RunConfig& config) {
    const auto start = Clock::now();
    double worst = 0.0;
    for (int n = 1; n <= config.n_max; ++n)
        for (double kappa : {0.5, 1.0, 2.0, 3.0})
            worst = std::max(worst, std::abs(integral_phase_check(n, kappa) - 1.0));
    return finish(config, "eq39_integral", {{"n_max", double(config.n_max)}},
                  "kappa in {0.5,1,2,3}", worst, 1e-8, start);
}

VerificationReport check_eq40_born(const RunConfig& config) {
    const auto start = Clock::now();
    double worst = 0.0;
    for (double kappa : {0.5, 1.0, 2.0, 5.0, 10.0}) {
        const double quadrature =
            (6.0 / kappa) *
            integrate(
                [&](double r) {
                    const double s = std::sin(kappa * r), c = std::cosh(r);
                    return s * s / (c * c);
                },
                0.0, std::numeric_limits<double>::infinity(), QuadratureSpec{});
        worst = std::max(worst, std::abs(quadrature - born_phase(kappa)));
    }
    return finish(config, "eq40_born", {}, "kappa in {0.5,1,2,5,10}", worst, 1e-8, start);
}

VerificationReport check_eq53_55_representation(const RunConfig& config) {
    const auto start = Clock::now();
    const int count_max = 8;
    double worst = 0.0;
    for (int count = 1; count <= count_max; ++count)
        for (int j = 0; j < count; ++j)
            for (double x = -3.0; x <= 3.0 + 1e-12; x += 0.5) {
                const AppendixEigenstateForms forms = appendix_eigenstate_forms(count, j, x);
                const double scale = std::max(1.0, std::abs(forms.legendre_form));
                worst = std::max(worst,
                                 std::abs(forms.derivative_form - forms.legendre_form) / scale);
            }
    return finish(config, "eq53_55_representation", {{"count_max", double(count_max)}},
                  "x in [-3,3] step 0.5", worst, 1e-8, start);
}

VerificationReport check_eq60_detm(const RunConfig& config) {
    const auto start = Clock::now();
    const int count_max = 8;
    double worst = 0.0;
    for (int count = 1; count <= count_max; ++count)
        for (int i = 0; i < 50; ++i) {
            const double x = -5.0 + 10.0 * i / 49.0;
            const double log_direct = log_abs_det(build_m(GammaSequence::consecutive(count), x));
            const double log_closed = log_closed_form_det_m(count, x);
            worst = std::max(worst, std::abs(std::expm1(log_direct - log_closed)));
        }
    return finish(config, "eq60_detm", {{"count_max", double(count_max)}},
                  "50 x-points in [-5,5]", worst, 1e-8, start);
}

}  // namespace

Eigen::VectorXd KappaGrid::values() const {
    if (count < 1 || !(min > 0.0) || !(max >= min))
        throw std::domain_error("KappaGrid: need 0 < min <= max and count >= 1");
    Eigen::VectorXd out(count);
    if (count == 1) {
        out[0] = min;
        return out;
    }
    const double h = (max - min) / double(count - 1);
    for (int i = 0; i < count; ++i) out[i] = min + h * double(i);
    return out;
}

double RunConfig::tolerance_for(const std::string& check_name, double fallback) const {
    const auto it = tolerance_overrides.find(check_name);
    return it == tolerance_overrides.end() ? fallback : it->second;
}

const std::vector<CheckEntry>& verification_registry() {
    static const std::vector<CheckEntry> registry = {
        {"eq10_complex_shift", check_eq10_complex_shift},
        {"eq13_potential", check_eq13_potential},
        {"eq14_identity", check_eq14_identity},
        {"eq18_asymptotics", check_eq18_asymptotics},
        {"eq19_levinson", check_eq19_levinson},
        {"eq22_phase_equivalence", check_eq22_phase_equivalence},
        {"eq23_singular_reconstruction", check_eq23_singular_reconstruction},
        {"eq24_partner_solve", check_eq24_partner_solve},
        {"eq25_logdet", check_eq25_logdet},
        {"eq26_27_identity", check_eq26_27_identity},
        {"eq36_37_transform", check_eq36_37_transform},
        {"eq39_integral", check_eq39_integral},
        {"eq40_born", check_eq40_born},
        {"eq53_55_representation", check_eq53_55_representation},
        {"eq60_detm", check_eq60_detm},
    };
    return registry;
}

VerificationReport run_check(const std::string& name, const RunConfig& config) {
    for (const CheckEntry& entry : verification_registry())
        if (entry.name == name) return entry.run(config);
    throw std::out_of_range("run_check: unknown check " + name);
}

std::vector<VerificationReport> run_all_checks(const RunConfig& config) {
    std::vector<VerificationReport> out;
    out.reserve(verification_registry().size());
    for (const CheckEntry& entry : verification_registry()) out.push_back(entry.run(config));
    return out;
}

}  // namespace susyqm
