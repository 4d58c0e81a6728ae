#pragma once

#include <complex>
#include <cstdint>

#include "susyqm/polynomial.hpp"

namespace susyqm {

/// Associated Legendre degree/order pair; requires degree >= 0 and 0 <= order <= degree.
struct LegendreOrder {
    int degree;
    int order;
    LegendreOrder(int degree, int order);
};

/// Ascending coefficients of (d/dz)^{n+m} (1 - z^2)^n / (2^n n!), the polynomial part
/// shared by every branch of P_n^m.  Exact binomial expansion, no recurrences.
PolyCoeffs<double> legendre_core_polynomial(LegendreOrder nm);

/// P_n^m on the cut interval |z| < 1 (Condon-Shortley sign).
double legendre_inside(LegendreOrder nm, double z);

/// d/dz of legendre_inside.
double legendre_inside_derivative(LegendreOrder nm, double z);

/// P_n^m on the real axis y > 1, using the (y^2 - 1)^{m/2} prefactor.
double legendre_outside(LegendreOrder nm, double y);

/// Analytic continuation of the |z| < 1 branch: principal square root of (1 - w^2),
/// cut along (-inf, -1] and [1, inf).  Restricted to real |z| < 1 it reproduces
/// legendre_inside digit for digit.
std::complex<double> legendre_complex(LegendreOrder nm, std::complex<double> w);

/// k!! for k >= -1 (with (-1)!! = 0!! = 1); exact in uint64 up to k = 33.
std::uint64_t double_factorial(int k);

/// Normalizer of the j-th half-line bound state for well depth 2n(2n+1):
/// sqrt(2 (2j-1) (2n+1-2j)! / (2n-1+2j)!).
double bound_state_normalizer(int n, int j);

/// Normalizer of the symmetric full-line ground state below N stacked wells:
/// sqrt((2N-1)!! / (2^N (N-1)!)).
double ground_state_normalizer(int level_count);

}  // namespace susyqm
