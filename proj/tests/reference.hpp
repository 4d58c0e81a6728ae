#pragma once

// Recurrence-based associated Legendre oracles, independent of the library's
// binomial-expansion evaluation.  Conventions follow the library:
//   inside:  extra (-1)^degree on top of the Condon-Shortley recurrence
//   outside: positive (y^2-1)^{m/2} prefactor, no phase
#include <cmath>
#include <stdexcept>

namespace testref {

// Condon-Shortley P_l^m on |z| < 1 via the standard three-term climb.
inline double cs_legendre_inside(int l, int m, double z) {
    if (m < 0 || m > l) throw std::invalid_argument("cs_legendre_inside: bad order");
    const double s = std::sqrt(1.0 - z * z);
    double pmm = 1.0;
    for (int k = 1; k <= m; ++k) pmm *= -double(2 * k - 1) * s;
    if (l == m) return pmm;
    double pm1 = z * double(2 * m + 1) * pmm;
    if (l == m + 1) return pm1;
    double p = 0.0;
    for (int ll = m + 2; ll <= l; ++ll) {
        p = (z * double(2 * ll - 1) * pm1 - double(ll - 1 + m) * pmm) / double(ll - m);
        pmm = pm1;
        pm1 = p;
    }
    return p;
}

inline double legendre_inside(int l, int m, double z) {
    const double flip = (l % 2 == 0) ? 1.0 : -1.0;
    return flip * cs_legendre_inside(l, m, z);
}

// P_l^m on y > 1: same climb started from (2m-1)!! (y^2-1)^{m/2}.
inline double legendre_outside(int l, int m, double y) {
    if (m < 0 || m > l) throw std::invalid_argument("legendre_outside: bad order");
    const double s = std::sqrt(y * y - 1.0);
    double pmm = 1.0;
    for (int k = 1; k <= m; ++k) pmm *= double(2 * k - 1) * s;
    if (l == m) return pmm;
    double pm1 = y * double(2 * m + 1) * pmm;
    if (l == m + 1) return pm1;
    double p = 0.0;
    for (int ll = m + 2; ll <= l; ++ll) {
        p = (y * double(2 * ll - 1) * pm1 - double(ll - 1 + m) * pmm) / double(ll - m);
        pmm = pm1;
        pm1 = p;
    }
    return p;
}

}  // namespace testref
