#pragma once

#include <Eigen/Dense>

namespace susyqm {

// Dense polynomials stored as ascending coefficient vectors: p(z) = sum_i c[i] z^i.
// Used for the closed-form Legendre products and their exact antiderivatives.

template <typename Scalar>
using PolyCoeffs = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar, typename Arg>
Arg poly_eval(const PolyCoeffs<Scalar>& c, Arg z) {
    Arg acc = Arg(0);
    for (Eigen::Index i = c.size() - 1; i >= 0; --i) acc = acc * z + Arg(c[i]);
    return acc;
}

template <typename Scalar>
PolyCoeffs<Scalar> poly_mul(const PolyCoeffs<Scalar>& a, const PolyCoeffs<Scalar>& b) {
    PolyCoeffs<Scalar> out = PolyCoeffs<Scalar>::Zero(a.size() + b.size() - 1);
    for (Eigen::Index i = 0; i < a.size(); ++i)
        for (Eigen::Index j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

template <typename Scalar>
PolyCoeffs<Scalar> poly_derivative(const PolyCoeffs<Scalar>& c) {
    if (c.size() <= 1) return PolyCoeffs<Scalar>::Zero(1);
    PolyCoeffs<Scalar> out(c.size() - 1);
    for (Eigen::Index i = 1; i < c.size(); ++i) out[i - 1] = c[i] * Scalar(i);
    return out;
}

/// Antiderivative vanishing at zero.
template <typename Scalar>
PolyCoeffs<Scalar> poly_antiderivative(const PolyCoeffs<Scalar>& c) {
    PolyCoeffs<Scalar> out = PolyCoeffs<Scalar>::Zero(c.size() + 1);
    for (Eigen::Index i = 0; i < c.size(); ++i) out[i + 1] = c[i] / Scalar(i + 1);
    return out;
}

}  // namespace susyqm
