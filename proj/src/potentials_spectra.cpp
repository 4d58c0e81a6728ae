#include "susyqm/potentials_spectra.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace susyqm {

namespace {

void check_level(int n, int j) {
    if (n < 1 || j < 1 || j > n) throw std::domain_error("bound state: need 1 <= j <= n");
}

// Terms c * tanh^a(x) * cosh^-b(x) keyed by (a, b); coefficients stay integral.
using TermMap = std::map<std::pair<int, int>, double>;

// f -> d/dx (f / cosh x) in the term basis.
TermMap derive_over_cosh(const TermMap& terms) {
    TermMap out;
    for (const auto& [key, c] : terms) {
        const auto [a, b] = key;
        const int bb = b + 1;
        if (a >= 1) out[{a - 1, bb + 2}] += c * double(a);
        out[{a + 1, bb}] += -c * double(bb);
    }
    return out;
}

}  // namespace

PotentialModel PotentialModel::deep_sech2(int n) {
    if (n < 1) throw std::domain_error("deep_sech2: need n >= 1");
    return {PotentialKind::DeepSech2, n, std::nullopt};
}

PotentialModel PotentialModel::singular_cosech2(int n) {
    if (n < 1) throw std::domain_error("singular_cosech2: need n >= 1");
    return {PotentialKind::SingularCosech2, n, std::nullopt};
}

PotentialModel PotentialModel::determinant_built(DetSystem sys) {
    return {PotentialKind::DeterminantBuilt, 0, std::move(sys)};
}

double PotentialModel::strength() const {
    if (kind == PotentialKind::DeterminantBuilt)
        throw std::domain_error("strength: undefined for determinant-built potentials");
    return 2.0 * double(n) * double(2 * n + 1);
}

double potential_value(const PotentialModel& model, double r) {
    switch (model.kind) {
        case PotentialKind::DeepSech2: {
            const double c = std::cosh(r);
            return -model.strength() / (c * c);
        }
        case PotentialKind::SingularCosech2: {
            if (r == 0.0) throw std::domain_error("potential_value: singular at r = 0");
            const double s = std::sinh(r);
            return model.strength() / (s * s);
        }
        case PotentialKind::DeterminantBuilt:
            return -2.0 * log_det_second_derivative(*model.system, r);
    }
    throw std::logic_error("potential_value: unreachable");
}

double bound_state(int n, int j, double r) {
    check_level(n, j);
    return bound_state_normalizer(n, j) *
           legendre_inside(LegendreOrder(2 * n, 2 * j - 1), std::tanh(r));
}

double bound_state_derivative(int n, int j, double r) {
    check_level(n, j);
    const double c = std::cosh(r);
    return bound_state_normalizer(n, j) *
           legendre_inside_derivative(LegendreOrder(2 * n, 2 * j - 1), std::tanh(r)) / (c * c);
}

double partner_state(int n, int j, double r) {
    check_level(n, j);
    if (!(r > 0.0)) throw std::domain_error("partner_state: need r > 0");
    // Outside-branch Legendre at coth r, written hyperbolically: the root factor
    // (coth^2 - 1)^{m/2} collapses to cosech^m exactly, which keeps the tail accurate
    // where coth r - 1 itself underflows to rounding noise.
    const int m = 2 * j - 1;
    const double s = std::sinh(r);
    const double coth = std::cosh(r) / s;
    double pre = 1.0;
    for (int i = 0; i < m; ++i) pre /= s;
    return -bound_state_normalizer(n, j) * pre *
           poly_eval(legendre_core_polynomial(LegendreOrder(2 * n, m)), coth);
}

BoundStateSet make_bound_state_set(int n) {
    if (n < 1) throw std::domain_error("make_bound_state_set: need n >= 1");
    BoundStateSet set{n, {}};
    for (int j = 1; j <= n; ++j) {
        const double gamma = double(2 * j - 1);
        set.states.push_back({j, gamma, -gamma * gamma});
    }
    return set;
}

double eigenstate_sum_potential(int level_count, double z) {
    if (level_count < 1) throw std::domain_error("eigenstate_sum_potential: need N >= 1");
    if (std::abs(z) == 1.0) return 0.0;  // every term carries at least one (1 - z^2) factor
    if (!(std::abs(z) < 1.0)) throw std::domain_error("eigenstate_sum_potential: need |z| <= 1");
    double acc = 0.0;
    for (int m = 1; m <= level_count; ++m) {
        double ratio = 1.0;  // (N-m)! / (N+m)!
        for (int i = level_count - m + 1; i <= level_count + m; ++i) ratio /= double(i);
        const double p = legendre_inside(LegendreOrder(level_count, m), z);
        acc += double(m) * double(m) * ratio * p * p;
    }
    return -4.0 * acc;
}

ComplexShiftCheck complex_shift_check(int n, int j, double r) {
    check_level(n, j);
    if (!(r > 0.0)) throw std::domain_error("complex_shift_check: need r > 0");
    const double alpha = bound_state_normalizer(n, j);
    const LegendreOrder nm(2 * n, 2 * j - 1);
    auto continued = [&](double rr) {
        std::complex<double> w = std::tanh(std::complex<double>(rr, std::numbers::pi / 2.0));
        // pin the branch: approach the cut from above (and off it, even if tanh rounds real)
        const double im = std::abs(w.imag());
        w = {w.real(), im > 0.0 ? im : std::numeric_limits<double>::min()};
        return alpha * legendre_complex(nm, w);
    };
    const double modulus_ratio = std::abs(partner_state(n, j, r)) / std::abs(continued(r));
    std::complex<double> acc{0.0, 0.0};
    for (int k = 1; k <= 8; ++k) {
        const double rk = 0.5 * double(k);
        const std::complex<double> ratio = partner_state(n, j, rk) / continued(rk);
        acc += ratio / std::abs(ratio);
    }
    return {modulus_ratio, acc / std::abs(acc)};
}

double LadderChain::xi(double x) const {
    return std::pow(1.0 / std::cosh(x), xi_exponent);
}

LadderChain ladder_descend(int level_count) {
    if (level_count < 1) throw std::domain_error("ladder_descend: need level_count >= 1");
    LadderChain chain{level_count, {}, 0.5 * double(level_count) * double(level_count + 1)};
    int strength = level_count * (level_count + 1);
    for (int k = level_count; k >= 0; --k) {
        chain.rungs.push_back({k, strength});
        if (strength != k * (k + 1))
            throw std::logic_error("ladder_descend: rung strength left the k(k+1) family");
        strength -= 2 * k;  // removing the sech^k ground state costs 2k sech^2
    }
    if (chain.rungs.back().strength != 0)
        throw std::logic_error("ladder_descend: chain did not end at the free particle");
    return chain;
}

AppendixEigenstateForms appendix_eigenstate_forms(int level_count, int j, double x) {
    const int N = level_count;
    if (N < 1 || j < 0 || j >= N)
        throw std::domain_error("appendix_eigenstate_forms: need 0 <= j < level_count");

    TermMap terms{{{0, 2 * N - 2 * j}, 1.0}};
    for (int i = 0; i < j; ++i) terms = derive_over_cosh(terms);
    const double th = std::tanh(x), ch = std::cosh(x);
    double series = 0.0;
    for (const auto& [key, c] : terms) {
        const auto [a, b] = key;
        series += c * std::pow(th, a) * std::pow(ch, -(b - N));  // the cosh^N prefactor
    }
    double fact_2nj = 1.0;  // (2N - j)!
    for (int i = 2; i <= 2 * N - j; ++i) fact_2nj *= double(i);
    double fact_j = 1.0;
    for (int i = 2; i <= j; ++i) fact_j *= double(i);
    const double dfac = double(double_factorial(2 * N - 2 * j - 1));
    const double derivative_form = dfac * std::sqrt(double(N - j) / (fact_2nj * fact_j)) * series;

    const double legendre_form = std::sqrt(fact_j * double(N - j) / fact_2nj) *
                                 legendre_inside(LegendreOrder(N, N - j), th);
    return {derivative_form, legendre_form};
}

double appendix_eigenstate(int level_count, int j, double x) {
    const AppendixEigenstateForms forms = appendix_eigenstate_forms(level_count, j, x);
    const double scale = std::max(1.0, std::abs(forms.legendre_form));
    if (std::abs(forms.derivative_form - forms.legendre_form) > 1e-8 * scale)
        throw std::logic_error("appendix_eigenstate: representations disagree");
    return forms.legendre_form;
}

}  // namespace susyqm
