#include "susyqm/phase_equiv.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "susyqm/errors.hpp"
#include "susyqm/polynomial.hpp"

namespace susyqm {

namespace {

using Poly = PolyCoeffs<double>;

void check_radius(double r) {
    if (!(r > 0.0)) throw std::domain_error("phase_equiv: need r > 0");
}

// Exact antiderivative of Psi_j Psi_k dy as a polynomial in z = tanh y:
// the (1 - t^2)^{m/2} prefactors and the 1/(1 - t^2) Jacobian combine to an
// integer power because m_j + m_k is even.
Poly pair_antiderivative(int n, int j, int k) {
    const int mj = 2 * j - 1, mk = 2 * k - 1;
    const auto qj = legendre_core_polynomial(LegendreOrder(2 * n, mj));
    const auto qk = legendre_core_polynomial(LegendreOrder(2 * n, mk));
    Poly integrand = poly_mul(qj, qk);
    Poly one_minus_t2(3);
    one_minus_t2 << 1.0, 0.0, -1.0;
    for (int p = 0; p < (mj + mk) / 2 - 1; ++p) integrand = poly_mul(integrand, one_minus_t2);
    return poly_antiderivative(integrand);
}

// p(1 - w) as a polynomial in w; coefficients b_e = (-1)^e sum_{d >= e} c_d C(d, e).
Poly reflect_about_one(const Poly& c) {
    Poly out = Poly::Zero(c.size());
    for (Eigen::Index e = 0; e < c.size(); ++e) {
        double acc = 0.0;
        double binom = 1.0;  // C(d, e) starting at d = e
        for (Eigen::Index d = e; d < c.size(); ++d) {
            acc += c[d] * binom;
            binom = binom * double(d + 1) / double(d + 1 - e);
        }
        out[e] = (e % 2 == 0) ? acc : -acc;
    }
    return out;
}

// Coefficients below min_degree are analytic zeros of the construction; the arithmetic
// leaves rounding residue there which would otherwise dominate evaluations near the
// basis origin.  Zero them out.
void strip_below(Poly& p, int min_degree) {
    const Eigen::Index stop = std::min<Eigen::Index>(min_degree, p.size());
    for (Eigen::Index e = 0; e < stop; ++e) p[e] = 0.0;
}

void accumulate(Poly& acc, double sign, const Poly& term) {
    if (term.size() > acc.size()) {
        Poly grown = Poly::Zero(term.size());
        grown.head(acc.size()) = acc;
        acc.swap(grown);
    }
    acc.head(term.size()) += sign * term;
}

// Determinant of an n x n polynomial matrix (row-major) by expansion along rows,
// memoized on the column subset so the work is O(2^n) polynomial products.
Poly poly_det(int n, const std::vector<Poly>& m) {
    std::vector<Poly> dp(size_t(1) << n);
    dp[0] = Poly::Zero(1);
    dp[0][0] = 1.0;
    for (unsigned mask = 1; mask < dp.size(); ++mask) {
        const int row = std::popcount(mask) - 1;
        Poly acc = Poly::Zero(1);
        int pos = 0;
        for (int col = 0; col < n; ++col) {
            if (!(mask & (1u << col))) continue;
            const double sign = ((row + pos) % 2 == 0) ? 1.0 : -1.0;
            accumulate(acc, sign, poly_mul(m[size_t(row) * size_t(n) + size_t(col)],
                                           dp[mask & ~(1u << col)]));
            ++pos;
        }
        dp[mask] = std::move(acc);
    }
    return dp.back();
}

// The overlap matrix, its determinant, and the Cramer numerators for the partner-state
// solve, all as exact polynomials.  Two bases are kept: z = tanh r for small r and
// w = 1 - z for large r, where the z-polynomials would lose the tiny orthogonality
// tails to cancellation.  Known leading zeros (from the Gram structure at r -> 0 and
// orthonormality at r -> infinity) are stripped in both bases.
struct CramerForms {
    int n;
    std::vector<Poly> entry_z;  // n x n row-major, alpha-weighted
    std::vector<Poly> entry_w;
    Poly det_z, det_w;
    std::vector<Poly> numer_z;  // column j of F replaced by the bound-state column
    std::vector<Poly> numer_w;
};

CramerForms build_cramer_forms(int n) {
    CramerForms f;
    f.n = n;
    f.entry_z.resize(size_t(n) * size_t(n));
    f.entry_w.resize(size_t(n) * size_t(n));
    for (int j = 1; j <= n; ++j)
        for (int k = j; k <= n; ++k) {
            Poly z_form = bound_state_normalizer(n, j) * bound_state_normalizer(n, k) *
                          pair_antiderivative(n, j, k);
            Poly w_form = reflect_about_one(z_form);
            // tail ~ w^{(m_j+m_k)/2}; the constant term is the full-line inner product
            strip_below(w_form, j + k - 1);
            if (j == k) w_form[0] = 1.0;
            f.entry_z[size_t(j - 1) * size_t(n) + size_t(k - 1)] = z_form;
            f.entry_z[size_t(k - 1) * size_t(n) + size_t(j - 1)] = z_form;
            f.entry_w[size_t(j - 1) * size_t(n) + size_t(k - 1)] = w_form;
            f.entry_w[size_t(k - 1) * size_t(n) + size_t(j - 1)] = w_form;
        }

    // Bound states factor as Psi_k = sech(r) * u_k(tanh r) with u_k polynomial,
    // so each Cramer numerator is sech(r) times a polynomial determinant.
    std::vector<Poly> u_z(static_cast<size_t>(n));
    std::vector<Poly> u_w(static_cast<size_t>(n));
    Poly one_minus_z2(3);
    one_minus_z2 << 1.0, 0.0, -1.0;
    for (int k = 1; k <= n; ++k) {
        Poly u = -bound_state_normalizer(n, k) *
                 legendre_core_polynomial(LegendreOrder(2 * n, 2 * k - 1));
        for (int p = 0; p < k - 1; ++p) u = poly_mul(u, one_minus_z2);
        u_z[size_t(k - 1)] = u;
        Poly uw = reflect_about_one(u);
        strip_below(uw, k - 1);  // u_k carries (1 - z^2)^{k-1} = (w(2-w))^{k-1}
        u_w[size_t(k - 1)] = std::move(uw);
    }

    f.det_z = poly_det(n, f.entry_z);
    strip_below(f.det_z, n * (2 * n + 1));  // Gram determinant vanishes as r^{n(2n+1)}
    f.det_w = poly_det(n, f.entry_w);
    f.det_w[0] = 1.0;  // orthonormal limit

    f.numer_z.resize(size_t(n));
    f.numer_w.resize(size_t(n));
    for (int j = 1; j <= n; ++j) {
        std::vector<Poly> mz = f.entry_z, mw = f.entry_w;
        for (int row = 0; row < n; ++row) {
            mz[size_t(row) * size_t(n) + size_t(j - 1)] = u_z[size_t(row)];
            mw[size_t(row) * size_t(n) + size_t(j - 1)] = u_w[size_t(row)];
        }
        Poly nz = poly_det(n, mz);
        strip_below(nz, 2 * n * n - n);  // det * Phi_j / sech, with Phi_j ~ r^{-2n} at 0
        f.numer_z[size_t(j - 1)] = std::move(nz);
        Poly nw = poly_det(n, mw);
        strip_below(nw, j - 1);  // Phi_j decays as sech^{2j-1} at r -> infinity
        f.numer_w[size_t(j - 1)] = std::move(nw);
    }
    return f;
}

const CramerForms& cramer_forms(int n) {
    static std::mutex mu;
    static std::map<int, CramerForms> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, build_cramer_forms(n)).first;
    return it->second;
}

// 1 - tanh r without cancellation.
double tail_coordinate(double r) {
    const double q = std::exp(-2.0 * r);
    return 2.0 * q / (1.0 + q);
}

constexpr double kBranchSeam = 0.7;  // switch basis once tanh r exceeds this

double eval_two_branch(const Poly& pz, const Poly& pw, double r) {
    const double z = std::tanh(r);
    if (z <= kBranchSeam) return poly_eval(pz, z);
    return poly_eval(pw, tail_coordinate(r));
}

double logdet_overlap(int n, double r) {
    const CramerForms& f = cramer_forms(n);
    return std::log(eval_two_branch(f.det_z, f.det_w, r));
}

}  // namespace

OverlapMatrix overlap_matrix(int n, double r) {
    if (n < 1) throw std::domain_error("overlap_matrix: need n >= 1");
    if (!(r >= 0.0)) throw std::domain_error("overlap_matrix: need r >= 0");
    const CramerForms& forms = cramer_forms(n);
    Eigen::MatrixXd f(n, n);
    for (int j = 0; j < n; ++j)
        for (int k = j; k < n; ++k) {
            const size_t idx = size_t(j) * size_t(n) + size_t(k);
            const double value = eval_two_branch(forms.entry_z[idx], forms.entry_w[idx], r);
            f(j, k) = value;
            f(k, j) = value;
        }
    return {n, r, std::move(f)};
}

OverlapMatrix overlap_matrix_quadrature(int n, double r, const QuadratureSpec& spec) {
    if (n < 1) throw std::domain_error("overlap_matrix_quadrature: need n >= 1");
    if (!(r >= 0.0)) throw std::domain_error("overlap_matrix_quadrature: need r >= 0");
    if (r == 0.0) return {n, r, Eigen::MatrixXd::Zero(n, n)};
    Eigen::MatrixXd f(n, n);
    for (int j = 1; j <= n; ++j)
        for (int k = j; k <= n; ++k) {
            const double value = integrate(
                [&](double y) { return bound_state(n, j, y) * bound_state(n, k, y); }, 0.0, r,
                spec);
            f(j - 1, k - 1) = value;
            f(k - 1, j - 1) = value;
        }
    return {n, r, std::move(f)};
}

double singular_from_deep(int n, double r, double h) {
    check_radius(r);
    const double curvature =
        (-logdet_overlap(n, r - 2 * h) + 16.0 * logdet_overlap(n, r - h) -
         30.0 * logdet_overlap(n, r) + 16.0 * logdet_overlap(n, r + h) -
         logdet_overlap(n, r + 2 * h)) /
        (12.0 * h * h);
    const double c = std::cosh(r);
    return -2.0 * double(n) * double(2 * n + 1) / (c * c) - 2.0 * curvature;
}

Eigen::VectorXd partner_states_solve(int n, double r) {
    if (n < 1) throw std::domain_error("partner_states_solve: need n >= 1");
    if (!(r >= 1e-2))
        throw SingularMatrixError("partner_states_solve: overlap numerically singular below r = 1e-2",
                                  0);
    const CramerForms& f = cramer_forms(n);
    const double det = eval_two_branch(f.det_z, f.det_w, r);
    const double sech = 1.0 / std::cosh(r);
    Eigen::VectorXd phi(n);
    for (int j = 1; j <= n; ++j)
        phi[j - 1] =
            sech * eval_two_branch(f.numer_z[size_t(j - 1)], f.numer_w[size_t(j - 1)], r) / det;
    return phi;
}

double overlap_condition(int n, double r) {
    const OverlapMatrix f = overlap_matrix(n, r);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(f.entries);
    const auto& sv = svd.singularValues();
    if (!(sv[sv.size() - 1] > 0.0)) return std::numeric_limits<double>::infinity();
    return sv[0] / sv[sv.size() - 1];
}

double logdet_derivative_identity(int n, double r, double h) {
    check_radius(r);
    const double fd = derivative_five_point([&](double y) { return logdet_overlap(n, y); }, r, h);
    double closed = 0.0;
    for (int j = 1; j <= n; ++j) closed += bound_state(n, j, r) * partner_state(n, j, r);
    return std::abs(fd - closed);
}

IdentitySides product_sum_identity(int n, double r) {
    check_radius(r);
    double lhs = 0.0;
    for (int j = 1; j <= n; ++j) lhs += bound_state(n, j, r) * partner_state(n, j, r);
    const double rhs = double(n) * double(2 * n + 1) / (std::sinh(r) * std::cosh(r));
    return {lhs, rhs};
}

IdentitySides legendre_product_identity(int n, double z) {
    if (!(z > 0.0 && z < 1.0))
        throw std::domain_error("legendre_product_identity: need 0 < z < 1");
    // Each product P(z) P(1/z) equals (1-z^2)^m z^{-2n} times a polynomial whose
    // coefficients stay modest, so z^{2n} * lhs is assembled once as a polynomial and
    // evaluated.  Summing the evaluated products instead loses everything to
    // huge-times-tiny cancellation once 1/z is large.
    Poly one_minus_z2(3);
    one_minus_z2 << 1.0, 0.0, -1.0;
    Poly sum = Poly::Zero(1);
    for (int m = 1; m <= 2 * n - 1; m += 2) {
        double ratio = 1.0;  // (2n-m)!/(2n+m)!
        for (int i = 2 * n - m + 1; i <= 2 * n + m; ++i) ratio /= double(i);
        const Poly core = legendre_core_polynomial(LegendreOrder(2 * n, m));
        Poly reversed(core.size());
        for (Eigen::Index i = 0; i < core.size(); ++i) reversed[i] = core[core.size() - 1 - i];
        Poly term = poly_mul(core, reversed);
        for (int p = 0; p < m; ++p) term = poly_mul(term, one_minus_z2);
        // the sign of P(z)P(1/z)'s prefactor (-1)^m cancels the -2m's minus for odd m
        accumulate(sum, 2.0 * double(m) * ratio, term);
    }
    // z^{2n} * lhs inherits the r -> 0 behavior of the Gram log-derivative, ~ z^{2n-1}
    strip_below(sum, 2 * n - 1);
    double lhs = poly_eval(sum, z);
    for (int p = 0; p < 2 * n; ++p) lhs /= z;
    const double rhs = double(n) * double(2 * n + 1) * (1.0 - z * z) / z;
    return {lhs, rhs};
}

GeneralTransform general_wavefunction_transform(int n, double kappa, double r,
                                                const QuadratureSpec& spec) {
    check_radius(r);
    const DetSystem deep = DetSystem::plain(GammaSequence::consecutive(2 * n));
    const DetSystem singular = DetSystem::half_pi_shifted(GammaSequence::consecutive(2 * n));
    double transformed = scatter_state_det(deep, kappa, r);
    for (int j = 1; j <= n; ++j) {
        const double projection = integrate(
            [&](double y) { return bound_state(n, j, y) * scatter_state_det(deep, kappa, y); },
            0.0, r, spec);
        transformed -= partner_state(n, j, r) * projection;
    }
    const double direct = scatter_state_det(singular, kappa, r);
    const double deviation = std::abs(direct - transformed) / std::max(1.0, std::abs(direct));
    return {direct, transformed, deviation};
}

}  // namespace susyqm
