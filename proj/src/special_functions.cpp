#include "susyqm/special_functions.hpp"

#include <cmath>
#include <stdexcept>

namespace susyqm {

namespace {

double binomial(int n, int k) {
    double acc = 1.0;
    for (int i = 1; i <= k; ++i) acc = acc * double(n - k + i) / double(i);
    return acc;
}

// (a)(a-1)...(a-count+1)
double falling_product(int a, int count) {
    double acc = 1.0;
    for (int i = 0; i < count; ++i) acc *= double(a - i);
    return acc;
}

template <typename Scalar>
Scalar continued_inside(LegendreOrder nm, Scalar w) {
    const auto core = legendre_core_polynomial(nm);
    Scalar poly = poly_eval(core, w);
    Scalar root = std::sqrt(Scalar(1) - w * w);
    Scalar pre = Scalar(1);
    for (int i = 0; i < nm.order; ++i) pre *= root;
    const double sign = (nm.order % 2 == 0) ? 1.0 : -1.0;
    return sign * pre * poly;
}

}  // namespace

LegendreOrder::LegendreOrder(int degree_, int order_) : degree(degree_), order(order_) {
    if (degree < 0 || order < 0 || order > degree)
        throw std::domain_error("LegendreOrder: need degree >= 0 and 0 <= order <= degree");
}

PolyCoeffs<double> legendre_core_polynomial(LegendreOrder nm) {
    const int n = nm.degree, m = nm.order;
    const int deg = n - m;  // degree of d^{n+m} (1-z^2)^n
    PolyCoeffs<double> c = PolyCoeffs<double>::Zero(deg + 1);
    double norm = std::ldexp(1.0, n);  // 2^n
    for (int i = 2; i <= n; ++i) norm *= double(i);
    for (int k = 0; k <= n; ++k) {
        const int p = 2 * k - (n + m);  // power of z surviving the derivative
        if (p < 0) continue;
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        c[p] = sign * binomial(n, k) * falling_product(2 * k, n + m) / norm;
    }
    return c;
}

double legendre_inside(LegendreOrder nm, double z) {
    if (!(std::abs(z) < 1.0)) throw std::domain_error("legendre_inside: need |z| < 1");
    return continued_inside<double>(nm, z);
}

double legendre_inside_derivative(LegendreOrder nm, double z) {
    if (!(std::abs(z) < 1.0)) throw std::domain_error("legendre_inside_derivative: need |z| < 1");
    const int m = nm.order;
    const auto core = legendre_core_polynomial(nm);
    const double s2 = 1.0 - z * z;
    const double poly = poly_eval(core, z);
    const double dpoly = poly_eval(poly_derivative(core), z);
    const double sign = (m % 2 == 0) ? 1.0 : -1.0;
    // d/dz [ s^m * core(z) ] with s = sqrt(1-z^2); pull out s^{m-2} to keep m = 1 finite
    double pre = std::pow(std::sqrt(s2), m - 2);
    return sign * pre * (-double(m) * z * poly + s2 * dpoly);
}

double legendre_outside(LegendreOrder nm, double y) {
    if (!(y > 1.0)) throw std::domain_error("legendre_outside: need y > 1");
    const auto core = legendre_core_polynomial(nm);
    double poly = poly_eval(core, y);
    double root = std::sqrt(y * y - 1.0);
    double pre = 1.0;
    for (int i = 0; i < nm.order; ++i) pre *= root;
    const double sign = (nm.degree % 2 == 0) ? 1.0 : -1.0;  // (z^2-1)^n vs (1-z^2)^n
    return sign * pre * poly;
}

std::complex<double> legendre_complex(LegendreOrder nm, std::complex<double> w) {
    if (w.imag() == 0.0 && !(std::abs(w.real()) < 1.0))
        throw std::domain_error("legendre_complex: w on the branch cut |Re w| >= 1");
    return continued_inside<std::complex<double>>(nm, w);
}

std::uint64_t double_factorial(int k) {
    if (k < -1) throw std::domain_error("double_factorial: need k >= -1");
    if (k > 33) throw std::overflow_error("double_factorial: uint64 overflow past k = 33");
    std::uint64_t acc = 1;
    for (int i = k; i >= 2; i -= 2) acc *= std::uint64_t(i);
    return acc;
}

double bound_state_normalizer(int n, int j) {
    if (n < 1 || j < 1 || j > n)
        throw std::domain_error("bound_state_normalizer: need 1 <= j <= n");
    // (2n+1-2j)! / (2n-1+2j)! collapses to one over a product of consecutive integers
    double denom = 1.0;
    for (int i = 2 * n + 2 - 2 * j; i <= 2 * n - 1 + 2 * j; ++i) denom *= double(i);
    return std::sqrt(2.0 * double(2 * j - 1) / denom);
}

double ground_state_normalizer(int level_count) {
    if (level_count < 1) throw std::domain_error("ground_state_normalizer: need level_count >= 1");
    const double dfac = double(double_factorial(2 * level_count - 1));
    double denom = std::ldexp(1.0, level_count);
    for (int i = 2; i <= level_count - 1; ++i) denom *= double(i);
    return std::sqrt(dfac / denom);
}

}  // namespace susyqm
