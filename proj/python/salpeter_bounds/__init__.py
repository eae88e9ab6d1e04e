"""Schrodinger upper bounds to semirelativistic ground energies.

Python interface to the C++ core: radial eigensolvers for c*p^2 + W(r),
the tangential and difference upper-bound constructions for
sqrt(m^2 + p^2) + V(r), the pure-power scaling law, and the independent
Hermite-basis estimate for the massless linear case.
"""

from ._core import (
    BoundResult,
    EigenResult,
    LinearLimitRecord,
    PowerBaseEnergy,
    RadialPotential,
    SalpeterTerm,
    SchrodingerProblem,
    TangentCoefficients,
    WeylInequalityRecord,
    airy_zero,
    base_energy,
    difference_bound,
    dominates,
    fourier_swap,
    hermite_convergence_report,
    hermite_nonlocal_solver,
    linear_case_limit_check,
    parse_potential,
    perturbed_oscillator_slope,
    scale_energy,
    scale_kinetic,
    solve_ground,
    tangent_coefficients,
    tangential_bound,
    weyl_inequality_check,
    weyl_nonrel_bound,
    weyl_nonrel_objective,
)

__all__ = [
    "BoundResult",
    "EigenResult",
    "LinearLimitRecord",
    "PowerBaseEnergy",
    "RadialPotential",
    "SalpeterTerm",
    "SchrodingerProblem",
    "TangentCoefficients",
    "WeylInequalityRecord",
    "airy_zero",
    "base_energy",
    "difference_bound",
    "dominates",
    "fourier_swap",
    "hermite_convergence_report",
    "hermite_nonlocal_solver",
    "linear_case_limit_check",
    "parse_potential",
    "perturbed_oscillator_slope",
    "scale_energy",
    "scale_kinetic",
    "solve_ground",
    "tangent_coefficients",
    "tangential_bound",
    "weyl_inequality_check",
    "weyl_nonrel_bound",
    "weyl_nonrel_objective",
]
