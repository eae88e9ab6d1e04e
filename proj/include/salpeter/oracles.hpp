#pragma once

#include <vector>

#include "salpeter/radial_solver.hpp"

namespace salpeter {

/// Variational basis of reduced radial functions H_{4i+1}(r) exp(-r^2/2),
/// i = 0 .. basis_size-1. Orders congruent to 1 mod 4 reproduce themselves
/// under the momentum-space transform (the phase cancels in bilinears), so
/// the matrix of |p| in this basis equals the matrix of r.
struct HermiteBasisSpec {
    int basis_size = 32;
    double scale = 1.0;  // variational length scale multiplying r
};

/// Variational upper estimate of the bottom of the massless operator
/// |p| + r: the smallest eigenvalue of (scale + 1/scale) * R, where R is
/// the r-matrix in the orthonormalized basis. Matrix elements come from
/// exact integer recurrences (no quadrature), demoted to floating point
/// only at assembly.
double hermite_nonlocal_solver(const HermiteBasisSpec& spec = {});

/// The estimate at each listed basis size; non-increasing by variational
/// nesting.
std::vector<double> hermite_convergence_report(const std::vector<int>& basis_sizes,
                                               double scale = 1.0);

/// The r-matrix of the orthonormalized basis, row-major basis_size^2.
std::vector<double> hermite_r_matrix(int basis_size);

/// Overlap matrix of the orthonormalized basis, row-major; identity up to
/// rounding in the final float conversion.
std::vector<double> hermite_gram_matrix(int basis_size);

/// The first Airy zero as an energy: the cross-validated ground energy of
/// p^2 + r (never a hardcoded constant).
double airy_zero(const SolverConfig& config = {});

/// d/d(lambda) at 0 of the ground energy of p^2 + r^2 + lambda r, from
/// Richardson-combined central differences at lambda = 1e-2 and 1e-3.
double perturbed_oscillator_slope(const SolverConfig& config = {});

/// Diagonal ultrarelativistic-limit scan: the difference-bound objective
/// with a = b = s^4 for the massless linear potential at each s.
struct LinearLimitRecord {
    std::vector<double> s_values;
    std::vector<double> differences;       // E1(s^4, s^4) - E2(s^4, s^4)
    std::vector<double> excess_ratios;     // successive (difference - 4/sqrt(pi)) ratios
    double limit_estimate = 0.0;           // extrapolated large-s limit
    bool monotone_decreasing = false;
    bool symmetric_beats_asymmetric = false;
};

/// Evaluates the diagonal differences for increasing s, extrapolates the
/// limit, and checks that a = b beats nearby asymmetric splits.
/// Non-monotonicity is reported through the flag, not an error.
LinearLimitRecord linear_case_limit_check(const std::vector<double>& s_values,
                                          const SolverConfig& config = {});

}  // namespace salpeter
