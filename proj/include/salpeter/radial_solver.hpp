#pragma once

#include <optional>

#include "salpeter/potentials.hpp"

namespace salpeter {

/// Numerical parameters for the reduced-radial eigensolvers.
///
/// r_max left unset means the integration cutoff is chosen adaptively:
/// the smallest radius past the outer turning point where both
/// W(r) - E >= 25 and the WKB decay integral of the tail reaches ~18
/// (wavefunction amplitude below ~1e-8), so the truncation error is
/// negligible against energy_tolerance.
struct SolverConfig {
    std::optional<double> r_max;     // explicit cutoff; unset = adaptive
    int grid_points = 4000;
    double energy_tolerance = 1e-7;  // absolute, energy units
    int max_bisections = 200;
};

enum class SolveMethod { Shooting, SturmFD };

/// Ground-state eigenvalue plus solver diagnostics.
struct EigenResult {
    double energy = 0.0;
    int node_count = 0;
    double residual = 0.0;  // Shooting: matched log-derivative defect;
                            // SturmFD: inter-grid eigenvalue increment
    SolverConfig config_used;
    double r_max_used = 0.0;
    SolveMethod method = SolveMethod::Shooting;
};

/// Lowest s-wave eigenvalue of c*p^2 + W(r) by Numerov integration of the
/// reduced equation -c u'' + W u = E u, u(0) = 0, with node-counting
/// bisection on E against the Dirichlet condition at the cutoff.
EigenResult solve_ground_shooting(const SchrodingerProblem& problem, const SolverConfig& config = {});

/// Independent route: uniform-grid symmetric tridiagonal discretization,
/// smallest eigenvalue by Sturm-sequence bisection, Richardson-extrapolated
/// over two grid resolutions.
EigenResult solve_ground_sturm(const SchrodingerProblem& problem, const SolverConfig& config = {});

/// Runs both methods; returns the shooting result when they agree within
/// 10 * energy_tolerance, otherwise throws OracleMismatch carrying both.
EigenResult cross_validate(const SchrodingerProblem& problem, const SolverConfig& config = {});

namespace detail {

/// Single-grid (no Richardson) tridiagonal lowest eigenvalue; exposed so
/// grid-convergence contracts can be tested directly.
double sturm_lowest_single_grid(const SchrodingerProblem& problem, double r_max, int grid_points,
                                double tolerance);

/// The adaptive cutoff for a given energy estimate.
double resolve_r_max(const SchrodingerProblem& problem, double energy_estimate);

}  // namespace detail

}  // namespace salpeter
