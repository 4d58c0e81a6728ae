#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "susyqm/numerics.hpp"

namespace susyqm {

/// Strictly increasing, strictly positive soliton decay rates gamma_1 < ... < gamma_N.
class GammaSequence {
public:
    explicit GammaSequence(std::vector<double> values);
    /// The integer ladder {1, 2, ..., count}.
    static GammaSequence consecutive(int count);

    int size() const noexcept { return int(values_.size()); }
    double operator[](int j) const noexcept { return values_[size_t(j)]; }
    const std::vector<double>& values() const noexcept { return values_; }
    /// True exactly when the sequence is the integer ladder.
    bool closed_form() const noexcept { return closed_form_; }

private:
    std::vector<double> values_;
    bool closed_form_;
};

/// A soliton determinant system evaluated at x = r + shift, shift either 0 or i*pi/2.
/// The half-period shift turns the attractive sech^2 well into its singular partner.
struct DetSystem {
    GammaSequence gamma;
    std::complex<double> shift;

    explicit DetSystem(GammaSequence g, std::complex<double> shift = {0.0, 0.0});
    static DetSystem plain(GammaSequence g);
    static DetSystem half_pi_shifted(GammaSequence g);

    bool shifted() const noexcept { return shift.imag() != 0.0; }
};

/// Matrix with the per-column exponential growth exp(gamma_j |r|) factored out, so
/// det(original) = exp(log_scale) * det(matrix) and every stored entry stays bounded.
template <typename Scalar>
struct ScaledMatrix {
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> matrix;
    double log_scale;
};

/// Soliton matrix M (or its order-th derivative in r) at x = r, columns scaled.
ScaledMatrix<double> build_m(const GammaSequence& g, double r, int order = 0);

/// Same at x = r + i*pi/2.
ScaledMatrix<std::complex<double>> build_m_shifted(const GammaSequence& g, double r,
                                                   int order = 0);

/// Bordered matrix whose determinant ratio against M gives the scattering state:
/// soliton columns plus a free sinusoid column sin(kappa r) differentiated down the rows.
/// The sinusoid column is kept at real argument also for the shifted system, and carries
/// no scale factor, so det ratios against build_m{_shifted} need no rescaling.
ScaledMatrix<double> build_d_scatter(const GammaSequence& g, double kappa, double r);
ScaledMatrix<std::complex<double>> build_d_scatter_shifted(const GammaSequence& g, double kappa,
                                                            double r);

template <typename Scalar>
double log_abs_det(const ScaledMatrix<Scalar>& sm) {
    return sm.log_scale + std::log(std::abs(lu_det(sm.matrix)));
}

/// d^2/dr^2 ln Det M via tr(M^{-1} M'') - tr((M^{-1} M')^2); column scaling drops out.
/// Real part for the shifted system (the imaginary part cancels analytically).
double log_det_second_derivative(const DetSystem& sys, double r);

/// prod_{j<k} (x_k - x_j).
double vandermonde_det(const std::vector<double>& xs);

/// Det M for the integer ladder {1..count}: 2^{C(count,2)} (prod_{j<count} j!)
/// cosh^{count(count+1)/2}(x).  Valid for 1 <= count <= 10.
double closed_form_det_m(int count, double x);

/// log of the above, overflow-free for large |x|.
double log_closed_form_det_m(int count, double x);

}  // namespace susyqm
