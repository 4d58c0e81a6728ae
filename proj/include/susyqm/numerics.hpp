#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <queue>
#include <utility>
#include <vector>

#include "susyqm/errors.hpp"

namespace susyqm {

struct QuadratureSpec {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    int max_subdivisions = 2000;
};

/// Uniform grid r_min + i*step, i = 0..node_count()-1; (r_max - r_min)/step must be integral.
struct GridSpec {
    double r_min;
    double r_max;
    double step;
    GridSpec(double r_min, double r_max, double step);
    int node_count() const noexcept { return count_; }
    double node(int i) const noexcept { return r_min + step * double(i); }

private:
    int count_;
};

namespace detail {

template <typename Scalar>
int deficient_pivot(const Eigen::PartialPivLU<Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>>& lu) {
    const auto& diag = lu.matrixLU().diagonal();
    for (Eigen::Index i = 0; i < diag.size(); ++i)
        if (!(std::abs(diag[i]) >= 1e-300)) return int(i);
    return -1;
}

}  // namespace detail

/// Determinant via partial-pivot LU; returns exact zero once any pivot underflows
/// (|pivot| < 1e-300) instead of feeding denormals onward.
template <typename Derived>
typename Derived::Scalar lu_det(const Eigen::MatrixBase<Derived>& m) {
    using Scalar = typename Derived::Scalar;
    using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    Eigen::PartialPivLU<Mat> lu(m.eval());
    if (detail::deficient_pivot(lu) >= 0) return Scalar(0);
    return lu.determinant();
}

/// Solve a x = b by partial-pivot LU; throws SingularMatrixError naming the failed pivot.
Eigen::VectorXd lin_solve(const Eigen::MatrixXd& a, const Eigen::VectorXd& b);

namespace detail {

// 15-point Kronrod rule with embedded 7-point Gauss (QUADPACK dqk15 abscissae).
inline constexpr double kGkNodes[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
inline constexpr double kKronrodW[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double kGaussW[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double a, b, value, error;
    bool operator<(const Panel& o) const { return error < o.error; }
};

template <typename F>
Panel gk15_panel(F&& f, double a, double b) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    const double fc = f(c);
    double kron = kKronrodW[7] * fc;
    double gauss = kGaussW[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double lo = f(c - h * kGkNodes[i]), hi = f(c + h * kGkNodes[i]);
        kron += kKronrodW[i] * (lo + hi);
        if (i % 2 == 1) gauss += kGaussW[i / 2] * (lo + hi);
    }
    // |K - G| overestimates the Kronrod error; conservative and cheap
    return Panel{a, b, kron * h, std::abs(kron - gauss) * h};
}

template <typename F>
double integrate_finite(F&& f, double a, double b, const QuadratureSpec& spec) {
    std::priority_queue<Panel> queue;
    queue.push(gk15_panel(f, a, b));
    double value = queue.top().value, error = queue.top().error;
    int used = 0;
    while (error > std::max(spec.abs_tol, spec.rel_tol * std::abs(value))) {
        if (++used > spec.max_subdivisions)
            throw QuadratureError("integrate: subdivision budget exhausted", value, error);
        Panel worst = queue.top();
        queue.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        Panel left = gk15_panel(f, worst.a, mid), right = gk15_panel(f, mid, worst.b);
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        queue.push(left);
        queue.push(right);
    }
    return value;
}

}  // namespace detail

/// Adaptive Gauss-Kronrod integration of f over [a, b]; b may be +infinity, in which
/// case r = a + 2 atanh(t) maps the tail onto t in [0, 1) with interior nodes only.
template <typename F>
double integrate(F&& f, double a, double b, const QuadratureSpec& spec = {}) {
    if (!std::isfinite(a)) throw std::domain_error("integrate: lower limit must be finite");
    if (std::isfinite(b)) {
        if (!(a < b)) throw std::domain_error("integrate: need a < b");
        return detail::integrate_finite(f, a, b, spec);
    }
    auto mapped = [&f, a](double t) {
        const double r = a + 2.0 * std::atanh(t);
        return f(r) * 2.0 / (1.0 - t * t);
    };
    return detail::integrate_finite(mapped, 0.0, 1.0, spec);
}

/// March y'' = q(r) y across the grid from the two seed values at the first nodes.
template <typename F>
Eigen::VectorXd numerov_integrate(F&& q, const GridSpec& grid, double y0, double y1) {
    const int count = grid.node_count();
    if (count < 2) throw std::domain_error("numerov_integrate: need at least two nodes");
    Eigen::VectorXd qv(count), y(count);
    for (int i = 0; i < count; ++i) qv[i] = q(grid.node(i));
    y[0] = y0;
    y[1] = y1;
    const double h12 = grid.step * grid.step / 12.0;
    for (int i = 1; i + 1 < count; ++i) {
        y[i + 1] = (2.0 * y[i] * (1.0 + 5.0 * h12 * qv[i]) - y[i - 1] * (1.0 - h12 * qv[i - 1])) /
                   (1.0 - h12 * qv[i + 1]);
        if (!(std::abs(y[i + 1]) < 1e300))
            throw std::overflow_error("numerov_integrate: solution overflow; rescale seeds");
    }
    return y;
}

/// Centered five-point first derivative, O(h^4).
template <typename F>
double derivative_five_point(F&& f, double r, double h) {
    return (f(r - 2 * h) - 8.0 * f(r - h) + 8.0 * f(r + h) - f(r + 2 * h)) / (12.0 * h);
}

/// Centered five-point d^2/dr^2 ln|f|, O(h^4).
template <typename F>
double second_log_derivative(F&& f, double r, double h) {
    auto lg = [&f](double x) { return std::log(std::abs(f(x))); };
    return (-lg(r - 2 * h) + 16.0 * lg(r - h) - 30.0 * lg(r) + 16.0 * lg(r + h) - lg(r + 2 * h)) /
           (12.0 * h * h);
}

}  // namespace susyqm
