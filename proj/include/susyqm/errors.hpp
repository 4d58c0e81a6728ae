#pragma once

#include <stdexcept>
#include <string>

namespace susyqm {

/// Thrown when a pivot underflows during LU factorisation or solve.
class SingularMatrixError : public std::runtime_error {
public:
    SingularMatrixError(std::string what, int pivot_index)
        : std::runtime_error(std::move(what)), pivot_index_(pivot_index) {}

    int pivot_index() const noexcept { return pivot_index_; }

private:
    int pivot_index_;
};

/// Thrown when adaptive quadrature exhausts its subdivision budget.
/// Carries the best estimate obtained so far together with its error bound.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(std::string what, double best_estimate, double error_bound)
        : std::runtime_error(std::move(what)),
          best_estimate_(best_estimate),
          error_bound_(error_bound) {}

    double best_estimate() const noexcept { return best_estimate_; }
    double error_bound() const noexcept { return error_bound_; }

private:
    double best_estimate_;
    double error_bound_;
};

}  // namespace susyqm
