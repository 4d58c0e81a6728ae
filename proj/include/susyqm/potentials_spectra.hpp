#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "susyqm/soliton_matrices.hpp"
#include "susyqm/special_functions.hpp"

namespace susyqm {

enum class PotentialKind { DeepSech2, SingularCosech2, DeterminantBuilt };

/// The three potential families tied together here: the attractive well
/// -2n(2n+1) sech^2 r, its phase-equivalent singular partner +2n(2n+1) cosech^2 r,
/// and the determinant-built form -2 (ln Det M)''.
struct PotentialModel {
    PotentialKind kind;
    int n = 0;
    std::optional<DetSystem> system;

    static PotentialModel deep_sech2(int n);
    static PotentialModel singular_cosech2(int n);
    static PotentialModel determinant_built(DetSystem sys);

    /// 2n(2n+1) for the closed-form families.
    double strength() const;
};

double potential_value(const PotentialModel& model, double r);

/// j-th bound state of the deep half-line well: alpha_j P_{2n}^{2j-1}(tanh r),
/// bound at energy -(2j-1)^2.
double bound_state(int n, int j, double r);
double bound_state_derivative(int n, int j, double r);

/// State of the singular partner at the same energy: -alpha_j P_{2n}^{2j-1}(coth r).
double partner_state(int n, int j, double r);

struct BoundStateInfo {
    int j;
    double gamma;   // 2j - 1
    double energy;  // -gamma^2
};

/// The n bound levels shared, energy by energy, between the deep well and its partner.
struct BoundStateSet {
    int n;
    std::vector<BoundStateInfo> states;
    double psi(int j, double r) const { return bound_state(n, j, r); }
    double phi(int j, double r) const { return partner_state(n, j, r); }
};
BoundStateSet make_bound_state_set(int n);

/// -4 sum_m gamma_m Psi_m^2 for the full-line ladder of level_count wells, written in
/// z = tanh x:  -4 sum m^2 (N-m)!/(N+m)! P_N^m(z)^2.  Equals -N(N+1)(1-z^2).
double eigenstate_sum_potential(int level_count, double z);

struct ComplexShiftCheck {
    double modulus_ratio;                // |partner state| / |continued state| at r
    std::complex<double> fitted_phase;   // partner / continued direction, averaged over a grid
};

/// Continue the deep-well bound state to r + i*pi/2 (upper half-plane branch) and
/// compare against the partner state; the ratio is a constant unimodular phase.
ComplexShiftCheck complex_shift_check(int n, int j, double r);

struct LadderRung {
    int index;     // wells remaining
    int strength;  // potential is -strength * sech^2 x
};

/// SUSY ladder from -N(N+1) sech^2 x down to the free particle, removing the ground
/// state at every rung; xi is the product of the removed ground states.
struct LadderChain {
    int level_count;
    std::vector<LadderRung> rungs;  // strengths N(N+1), (N-1)N, ..., 2, 0
    double xi_exponent;             // N(N+1)/2
    /// prod of rung ground states: sech^{xi_exponent}(x).
    double xi(double x) const;
};

/// Build the chain by the ground-state-removal recursion and check it lands exactly
/// on the free particle.
LadderChain ladder_descend(int level_count);

struct AppendixEigenstateForms {
    double derivative_form;  // iterated (d/dx 1/cosh) representation
    double legendre_form;    // closed Legendre representation
};

/// Normalised full-line eigenstate at energy -(level_count - j)^2, j = 0..level_count-1,
/// evaluated through both representations.
AppendixEigenstateForms appendix_eigenstate_forms(int level_count, int j, double x);

/// The same state with the two forms cross-asserted to 1e-8.
double appendix_eigenstate(int level_count, int j, double x);

}  // namespace susyqm
