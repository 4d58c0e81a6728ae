#pragma once

#include <Eigen/Dense>

#include "susyqm/scattering.hpp"

namespace susyqm {

/// Gram matrix of the deep-well bound states on [0, r]: F_jk = int_0^r Psi_j Psi_k dy.
struct OverlapMatrix {
    int n;
    double r;
    Eigen::MatrixXd entries;
};

/// Exact route: in t = tanh y the integrand is a polynomial, integrated in closed form.
OverlapMatrix overlap_matrix(int n, double r);

/// Adaptive-quadrature route, used to cross-check the exact one.
OverlapMatrix overlap_matrix_quadrature(int n, double r, const QuadratureSpec& spec = {});

/// Reconstruct the singular partner from the deep well: V_d - 2 (d^2/dr^2) ln Det F,
/// the second derivative taken by five-point differencing of the exact ln Det F.
double singular_from_deep(int n, double r, double h = 1e-3);

/// Solve F Phi = Psi for the partner states at r (exact overlap entries).
Eigen::VectorXd partner_states_solve(int n, double r);

/// Spectral condition number of the overlap matrix, for reporting.
double overlap_condition(int n, double r);

/// | d/dr ln Det F  -  sum_j Psi_j Phi_j |  (five-point derivative vs closed forms).
double logdet_derivative_identity(int n, double r, double h = 1e-3);

struct IdentitySides {
    double lhs;
    double rhs;
};

/// sum_j Psi_j(r) Phi_j(r)  vs  n(2n+1)/(sinh r cosh r).
IdentitySides product_sum_identity(int n, double r);

/// The same identity in Legendre form at z = tanh r in (0, 1):
/// -sum_{m odd}^{2n-1} 2m (2n-m)!/(2n+m)! P_{2n}^m(z) P_{2n}^m(1/z)
///   vs  n(2n+1)(1 - z^2)/z.
IdentitySides legendre_product_identity(int n, double z);

struct GeneralTransform {
    double direct;       // singular-partner scattering state from its own determinant
    double transformed;  // deep-well state pushed through the subtraction integral
    double relative_deviation;
};

/// Transform the deep-well scattering state into the singular-partner one by
/// subtracting the bound-level projections: Phi = Psi - sum_j Phi_j int_0^r Psi_j Psi.
GeneralTransform general_wavefunction_transform(int n, double kappa, double r,
                                                const QuadratureSpec& spec = {});

}  // namespace susyqm
