#include "susyqm/scattering.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

#include "susyqm/numerics.hpp"

namespace susyqm {

namespace {

constexpr double kPi = std::numbers::pi;

void check_kappa(double kappa) {
    if (!(kappa > 0.0) || !std::isfinite(kappa))
        throw std::domain_error("scattering: need kappa > 0");
}

DetSystem deep_system(int n) { return DetSystem::plain(GammaSequence::consecutive(2 * n)); }

DetSystem singular_system(int n) {
    return DetSystem::half_pi_shifted(GammaSequence::consecutive(2 * n));
}

double analytic_reference(int n, bool singular_partner, double kappa) {
    return singular_partner ? phase_shift_singular_analytic(n, kappa)
                            : phase_shift_analytic(n, kappa);
}

// Walk kappa downward from a large anchor, lifting each mod-pi representative to the
// value nearest its predecessor.  The anchor multiple of pi comes from the closed form;
// steps are kept small against the slope bound |d delta / d kappa| <= H_{2n}.
std::vector<double> lifted_walk(const std::function<double(double)>& rep_of, int n,
                                bool singular_partner, const std::vector<double>& targets) {
    const double anchor =
        std::max({targets.front(), double(n * (2 * n + 1)), 8.0});
    double current = lift_phase_near(rep_of(anchor), analytic_reference(n, singular_partner, anchor));
    double kappa = anchor;
    std::vector<double> out;
    out.reserve(targets.size());
    for (double target : targets) {
        while (kappa - target > 0.26) {
            kappa -= 0.25;
            current = lift_phase_near(rep_of(kappa), current);
        }
        current = lift_phase_near(rep_of(target), current);
        kappa = target;
        out.push_back(current);
    }
    return out;
}

double det_rep(const DetSystem& sys, double kappa, double r_match) {
    const ValueSlope vs = scatter_state_det_with_slope(sys, kappa, r_match);
    return extract_phase(vs.value, vs.slope, kappa, r_match);
}

// One Numerov march for either closed-form family; returns the mod-pi phase.
double numerov_rep(const PotentialModel& model, double kappa, double step, double r_match) {
    const bool singular = model.kind == PotentialKind::SingularCosech2;
    const double r_min = singular ? 1e-2 : 0.0;
    const GridSpec grid(r_min, r_match, step);
    auto q = [&](double r) {
        const double v = (singular || r > 0.0) ? potential_value(model, r)
                                               : -model.strength();  // deep well at r = 0
        return v - kappa * kappa;
    };
    double y0, y1;
    if (!singular) {
        y0 = 0.0;
        y1 = step * (1.0 + q(0.0) * step * step / 6.0);
    } else {
        // Frobenius start y ~ r^{l+1} sum_k c_k r^{2k} for the l(l+1)/r^2 core, l = 2n
        const int l = 2 * model.n;
        const double lam = model.strength();
        const double u[5] = {-lam / 3.0 - kappa * kappa, lam / 15.0, -2.0 * lam / 189.0,
                             lam / 675.0, -2.0 * lam / 10395.0};
        double c[6] = {1.0, 0, 0, 0, 0, 0};
        for (int k = 1; k <= 5; ++k) {
            double acc = 0.0;
            for (int i = 0; i < k && i < 5; ++i) acc += u[i] * c[k - 1 - i];
            c[k] = acc / (2.0 * double(k) * double(2 * l + 2 * k + 1));
        }
        auto series = [&](double r) {
            double acc = 0.0;
            for (int k = 5; k >= 0; --k) acc = acc * r * r + c[k];
            return std::pow(r / r_min, l + 1) * acc;  // common scale dropped
        };
        y0 = series(r_min);
        y1 = series(r_min + step);
    }
    const Eigen::VectorXd y = numerov_integrate(q, grid, y0, y1);
    const int m = grid.node_count() - 3;
    const double slope =
        (y[m - 2] - 8.0 * y[m - 1] + 8.0 * y[m + 1] - y[m + 2]) / (12.0 * step);
    return extract_phase(y[m], slope, kappa, grid.node(m));
}

std::pair<int, bool> family_of(const PotentialModel& model) {
    switch (model.kind) {
        case PotentialKind::DeepSech2:
            return {model.n, false};
        case PotentialKind::SingularCosech2:
            return {model.n, true};
        case PotentialKind::DeterminantBuilt: {
            const GammaSequence& g = model.system->gamma;
            if (!g.closed_form() || g.size() % 2 != 0 || model.system->shifted())
                throw std::domain_error(
                    "numerov_phase_shift: anchor known only for plain even integer ladders");
            return {g.size() / 2, false};
        }
    }
    throw std::logic_error("family_of: unreachable");
}

}  // namespace

double phase_shift_analytic(int n, double kappa) {
    if (n < 1) throw std::domain_error("phase_shift_analytic: need n >= 1");
    double acc = double(n) * kPi;
    for (int j = 1; j <= 2 * n; ++j) acc -= std::atan(kappa / double(j));
    return acc;
}

double phase_shift_singular_analytic(int n, double kappa) {
    if (n < 1) throw std::domain_error("phase_shift_singular_analytic: need n >= 1");
    double acc = 0.0;
    for (int j = 1; j <= 2 * n; ++j) acc -= std::atan(kappa / double(j));
    return acc;
}

double scatter_state_det(const DetSystem& sys, double kappa, double r) {
    check_kappa(kappa);
    if (sys.shifted()) {
        const auto d = build_d_scatter_shifted(sys.gamma, kappa, r);
        const auto m = build_m_shifted(sys.gamma, r);
        const std::complex<double> ratio = lu_det(d.matrix) / lu_det(m.matrix);
        return ratio.real();
    }
    const auto d = build_d_scatter(sys.gamma, kappa, r);
    const auto m = build_m(sys.gamma, r);
    return lu_det(d.matrix) / lu_det(m.matrix);
}

ValueSlope scatter_state_det_with_slope(const DetSystem& sys, double kappa, double r, double h) {
    const double slope = derivative_five_point(
        [&](double rr) { return scatter_state_det(sys, kappa, rr); }, r, h);
    return {scatter_state_det(sys, kappa, r), slope};
}

double extract_phase(double value, double slope, double kappa, double r) {
    return reduce_phase(std::atan2(kappa * value, slope) - kappa * r);
}

double extract_amplitude(double value, double slope, double kappa) {
    return std::hypot(value, slope / kappa);
}

double reduce_phase(double phase) {
    double rep = std::fmod(phase, kPi);
    if (rep < 0.0) rep += kPi;
    return rep;
}

double lift_phase_near(double rep, double reference) {
    return rep + kPi * std::round((reference - rep) / kPi);
}

double det_phase_shift(int n, double kappa, bool singular_partner, double r_match) {
    check_kappa(kappa);
    const DetSystem sys = singular_partner ? singular_system(n) : deep_system(n);
    auto rep_of = [&](double k) { return det_rep(sys, k, r_match); };
    return lifted_walk(rep_of, n, singular_partner, {kappa}).front();
}

double numerov_phase_shift(const PotentialModel& model, double kappa, double step,
                           double r_match) {
    check_kappa(kappa);
    const auto [n, singular] = family_of(model);
    auto rep_of = [&](double k) { return numerov_rep(model, k, step, r_match); };
    return lifted_walk(rep_of, n, singular, {kappa}).front();
}

PhaseShiftCurve phase_shift_curve(int n, bool singular_partner, PhaseRoute route,
                                  const Eigen::VectorXd& kappas, double step, double r_match) {
    if (kappas.size() == 0) throw std::domain_error("phase_shift_curve: empty kappa grid");
    std::vector<int> order(size_t(kappas.size()));
    for (size_t i = 0; i < order.size(); ++i) order[i] = int(i);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return kappas[a] > kappas[b]; });
    std::vector<double> targets;
    targets.reserve(order.size());
    for (int idx : order) {
        check_kappa(kappas[idx]);
        targets.push_back(kappas[idx]);
    }

    PhaseShiftCurve curve{kappas, Eigen::VectorXd(kappas.size()),
                          singular_partner ? 0 : n};
    if (route == PhaseRoute::ClosedForm) {
        for (Eigen::Index i = 0; i < kappas.size(); ++i)
            curve.deltas[i] = analytic_reference(n, singular_partner, kappas[i]);
        return curve;
    }

    std::function<double(double)> rep_of;
    const DetSystem sys = singular_partner ? singular_system(n) : deep_system(n);
    const PotentialModel model = singular_partner ? PotentialModel::singular_cosech2(n)
                                                  : PotentialModel::deep_sech2(n);
    if (route == PhaseRoute::DeterminantRatio)
        rep_of = [&sys, r_match](double k) { return det_rep(sys, k, r_match); };
    else
        rep_of = [&model, step, r_match](double k) {
            return numerov_rep(model, k, step, r_match);
        };
    const std::vector<double> lifted = lifted_walk(rep_of, n, singular_partner, targets);
    for (size_t i = 0; i < order.size(); ++i) curve.deltas[order[i]] = lifted[i];
    return curve;
}

double asymptotic_scatter_form(int n, double kappa, double r) {
    std::complex<double> prod{1.0, 0.0};
    for (int j = 1; j <= 2 * n; ++j) prod *= std::complex<double>(-double(j), kappa);
    return (std::exp(std::complex<double>(0.0, kappa * r)) * prod).imag();
}

double integral_phase_check(int n, double kappa, const QuadratureSpec& spec) {
    check_kappa(kappa);
    const DetSystem sys = deep_system(n);
    const double r_match = 25.0;
    const ValueSlope vs = scatter_state_det_with_slope(sys, kappa, r_match);
    const double delta = det_phase_shift(n, kappa);
    // signed amplitude: project the sample onto the asymptotic sinusoid
    const double s = std::sin(kappa * r_match + delta), c = std::cos(kappa * r_match + delta);
    const double amplitude = vs.value * s + (vs.slope / kappa) * c;
    const PotentialModel well = PotentialModel::deep_sech2(n);
    const double integral = integrate(
        [&](double r) {
            return potential_value(well, r) * std::sin(kappa * r) *
                   scatter_state_det(sys, kappa, r) / amplitude;
        },
        0.0, std::numeric_limits<double>::infinity(), spec);
    return (-integral / kappa) / std::sin(delta);
}

double born_phase(double kappa, const QuadratureSpec& spec) {
    check_kappa(kappa);
    const double quadrature =
        (6.0 / kappa) * integrate(
                            [&](double r) {
                                const double s = std::sin(kappa * r), c = std::cosh(r);
                                return s * s / (c * c);
                            },
                            0.0, std::numeric_limits<double>::infinity(), spec);
    const double x = kappa * kPi;
    const double ratio =  // x / sinh x without overflow
        (x < 30.0) ? x / std::sinh(x) : 2.0 * x * std::exp(-x) / (1.0 - std::exp(-2.0 * x));
    const double closed = (3.0 / kappa) * (1.0 - ratio);
    if (std::abs(quadrature - closed) > 1e-8 * std::max(1.0, std::abs(closed)))
        throw std::logic_error("born_phase: quadrature disagrees with the closed form");
    return closed;
}

double wavefunction_relation_check(int n, double kappa, double r) {
    check_kappa(kappa);
    if (!(r > 0.0)) throw std::domain_error("wavefunction_relation_check: need r > 0");
    const DetSystem deep = deep_system(n), singular = singular_system(n);
    const double psi = scatter_state_det(deep, kappa, r);
    const double dpsi = derivative_five_point(
        [&](double rr) { return scatter_state_det(deep, kappa, rr); }, r, 1e-3);
    double rhs = psi;
    for (int j = 1; j <= n; ++j) {
        const double gamma = double(2 * j - 1);
        const double wronskian = bound_state(n, j, r) * dpsi - psi * bound_state_derivative(n, j, r);
        rhs += partner_state(n, j, r) / (gamma * gamma + kappa * kappa) * wronskian;
    }
    const double lhs = scatter_state_det(singular, kappa, r);
    return std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs));
}

}  // namespace susyqm
