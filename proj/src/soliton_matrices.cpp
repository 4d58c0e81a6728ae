#include "susyqm/soliton_matrices.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace susyqm {

namespace {

double real_of(double v) { return v; }
double real_of(std::complex<double> v) { return v.real(); }

// Rows 1..row_count of the order-th r-derivative of the soliton matrix at position x,
// column j scaled by exp(-gamma_j |Re x|).
template <typename Scalar>
ScaledMatrix<Scalar> build_soliton_block(const GammaSequence& g, Scalar x, int row_count,
                                         int order) {
    const int n = g.size();
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out(row_count, n);
    const double a = std::abs(real_of(x));
    double log_scale = 0.0;
    for (int j = 0; j < n; ++j) {
        const double gam = g[j];
        log_scale += gam * a;
        const Scalar grow = std::exp(gam * (x - a));    // exp(gamma x) / scale, |.| <= 1
        const Scalar decay = std::exp(-gam * (x + a));  // exp(-gamma x) / scale, |.| <= 1
        double power = std::pow(gam, order);
        for (int k = 0; k < row_count; ++k) {
            const double sign = ((j + k + order) % 2 == 0) ? 1.0 : -1.0;
            out(k, j) = 0.5 * power * (grow + sign * decay);
            power *= gam;
        }
    }
    return {std::move(out), log_scale};
}

// sin(kappa r) differentiated k times: kappa^k * cycle(sin, cos, -sin, -cos).
double sinusoid_column_entry(double kappa, double r, int k) {
    const double arg = kappa * r;
    const double base = (k % 2 == 0) ? std::sin(arg) : std::cos(arg);
    const double sign = (k % 4 < 2) ? 1.0 : -1.0;
    return sign * std::pow(kappa, k) * base;
}

template <typename Scalar>
ScaledMatrix<Scalar> build_d_impl(const GammaSequence& g, Scalar x, double kappa, double r) {
    const int n = g.size();
    ScaledMatrix<Scalar> block = build_soliton_block(g, x, n + 1, 0);
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out(n + 1, n + 1);
    out.leftCols(n) = block.matrix;
    for (int k = 0; k <= n; ++k) out(k, n) = Scalar(sinusoid_column_entry(kappa, r, k));
    return {std::move(out), block.log_scale};
}

template <typename Scalar>
double log_det_second_derivative_impl(const GammaSequence& g, Scalar x) {
    using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    const Mat m0 = build_soliton_block(g, x, g.size(), 0).matrix;
    const Mat m1 = build_soliton_block(g, x, g.size(), 1).matrix;
    const Mat m2 = build_soliton_block(g, x, g.size(), 2).matrix;
    Eigen::PartialPivLU<Mat> lu(m0);
    const int bad = detail::deficient_pivot(lu);
    if (bad >= 0)
        throw SingularMatrixError("log_det_second_derivative: Det M vanished, pivot " +
                                      std::to_string(bad),
                                  bad);
    const Mat first = lu.solve(m1);
    const Mat second = lu.solve(m2);
    const Scalar value = second.trace() - (first * first).trace();
    return real_of(value);
}

constexpr std::complex<double> kHalfPiShift{0.0, std::numbers::pi / 2.0};

}  // namespace

GammaSequence::GammaSequence(std::vector<double> values) : values_(std::move(values)) {
    if (values_.empty()) throw std::domain_error("GammaSequence: need at least one rate");
    double prev = 0.0;
    for (double v : values_) {
        if (!(v > prev) || !std::isfinite(v))
            throw std::domain_error("GammaSequence: rates must be finite, positive, increasing");
        prev = v;
    }
    closed_form_ = true;
    for (size_t i = 0; i < values_.size(); ++i)
        if (values_[i] != double(i + 1)) closed_form_ = false;
}

GammaSequence GammaSequence::consecutive(int count) {
    if (count < 1) throw std::domain_error("GammaSequence: need count >= 1");
    std::vector<double> v(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i) v[size_t(i)] = double(i + 1);
    return GammaSequence(std::move(v));
}

DetSystem::DetSystem(GammaSequence g, std::complex<double> shift_)
    : gamma(std::move(g)), shift(shift_) {
    const bool plain = shift == std::complex<double>(0.0, 0.0);
    if (!plain && shift != kHalfPiShift)
        throw std::domain_error("DetSystem: shift must be 0 or i*pi/2");
}

DetSystem DetSystem::plain(GammaSequence g) { return DetSystem(std::move(g)); }

DetSystem DetSystem::half_pi_shifted(GammaSequence g) {
    return DetSystem(std::move(g), kHalfPiShift);
}

ScaledMatrix<double> build_m(const GammaSequence& g, double r, int order) {
    return build_soliton_block<double>(g, r, g.size(), order);
}

ScaledMatrix<std::complex<double>> build_m_shifted(const GammaSequence& g, double r, int order) {
    return build_soliton_block<std::complex<double>>(g, std::complex<double>(r, 0.0) + kHalfPiShift,
                                                     g.size(), order);
}

ScaledMatrix<double> build_d_scatter(const GammaSequence& g, double kappa, double r) {
    return build_d_impl<double>(g, r, kappa, r);
}

ScaledMatrix<std::complex<double>> build_d_scatter_shifted(const GammaSequence& g, double kappa,
                                                            double r) {
    return build_d_impl<std::complex<double>>(g, std::complex<double>(r, 0.0) + kHalfPiShift,
                                              kappa, r);
}

double log_det_second_derivative(const DetSystem& sys, double r) {
    if (sys.shifted())
        return log_det_second_derivative_impl<std::complex<double>>(
            sys.gamma, std::complex<double>(r, 0.0) + kHalfPiShift);
    return log_det_second_derivative_impl<double>(sys.gamma, r);
}

double vandermonde_det(const std::vector<double>& xs) {
    double acc = 1.0;
    for (size_t k = 1; k < xs.size(); ++k)
        for (size_t j = 0; j < k; ++j) acc *= xs[k] - xs[j];
    return acc;
}

double log_closed_form_det_m(int count, double x) {
    if (count < 1 || count > 10)
        throw std::domain_error("closed_form_det_m: valid for 1 <= count <= 10");
    double log_super = 0.0;  // log prod_{j=1}^{count-1} j!
    double log_fact = 0.0;
    for (int j = 1; j < count; ++j) {
        log_fact += std::log(double(j));
        log_super += log_fact;
    }
    const double pairs = 0.5 * double(count) * double(count - 1);
    const double exponent = 0.5 * double(count) * double(count + 1);
    // log cosh without overflow
    const double ax = std::abs(x);
    const double log_cosh = ax + std::log1p(std::exp(-2.0 * ax)) - std::numbers::ln2;
    return pairs * std::numbers::ln2 + log_super + exponent * log_cosh;
}

double closed_form_det_m(int count, double x) {
    if (count < 1 || count > 10)
        throw std::domain_error("closed_form_det_m: valid for 1 <= count <= 10");
    double super = 1.0, fact = 1.0;
    for (int j = 1; j < count; ++j) {
        fact *= double(j);
        super *= fact;
    }
    return std::ldexp(super, count * (count - 1) / 2) *
           std::pow(std::cosh(x), 0.5 * double(count) * double(count + 1));
}

}  // namespace susyqm
