#pragma once

#include "salpeter/radial_solver.hpp"

namespace salpeter {

/// Lowest eigenvalue of the unit-coupling pure-power problem
/// p^2 + sgn(q) r^q, cached per exponent.
struct PowerBaseEnergy {
    double exponent = 0.0;    // q, with q > -2 and q != 0
    double base_energy = 0.0; // E(1)
};

/// Cross-validated solve of p^2 + sgn(q) r^q, memoized per process and
/// safe for concurrent callers. Literature constants never enter here.
PowerBaseEnergy base_energy(double exponent, const SolverConfig& config = {});

/// Coupling scaling law for pure powers: E(v) = E(1) * v^(2/(2+q)).
double scale_energy(const PowerBaseEnergy& base, double coupling);

/// Lowest eigenvalue of c p^2 + v sgn(q) r^q, via the algebraic reduction
/// E = c * E(1) * (v/c)^(2/(2+q)).
double scale_kinetic(const PowerBaseEnergy& base, double kinetic_coefficient, double coupling);

}  // namespace salpeter
