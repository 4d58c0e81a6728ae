#include "susyqm/numerics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace susyqm {

GridSpec::GridSpec(double r_min_, double r_max_, double step_)
    : r_min(r_min_), r_max(r_max_), step(step_) {
    if (!(step > 0.0) || !(r_max > r_min))
        throw std::domain_error("GridSpec: need step > 0 and r_max > r_min");
    const double ratio = (r_max - r_min) / step;
    const double rounded = std::round(ratio);
    if (std::abs(ratio - rounded) > 1e-9 * std::max(1.0, ratio))
        throw std::domain_error("GridSpec: (r_max - r_min)/step must be an integer");
    count_ = int(rounded) + 1;
}

Eigen::VectorXd lin_solve(const Eigen::MatrixXd& a, const Eigen::VectorXd& b) {
    if (a.rows() != a.cols() || a.rows() != b.size())
        throw std::domain_error("lin_solve: shape mismatch");
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(a);
    const int bad = detail::deficient_pivot(lu);
    if (bad >= 0)
        throw SingularMatrixError("lin_solve: singular matrix, pivot " + std::to_string(bad) +
                                      " underflowed",
                                  bad);
    return lu.solve(b);
}

}  // namespace susyqm
