#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "salpeter/potentials.hpp"
#include "salpeter/radial_solver.hpp"

namespace salpeter {

/// Tangent line a(t) x + b(t) touching the concave kinetic function
/// sqrt(m^2 + x) from above at x = t, with the equivalent envelope
/// parameter mu = sqrt(m^2 + t).
struct TangentCoefficients {
    double contact = 0.0;      // t, the value of p^2 at tangency
    double slope = 0.0;        // a(t) = 1 / (2 sqrt(m^2 + t))
    double intercept = 0.0;    // b(t) = (2 m^2 + t) / (2 sqrt(m^2 + t))
    double envelope_mu = 0.0;  // mu = sqrt(m^2 + t)
};

enum class BoundMethod { Tangential, Difference, DifferenceAlt, WeylNonRel };

/// Outcome of one bound construction: the optimized bound value, the
/// optimizing parameters, component energies for difference methods, and
/// the full optimizer trace for auditability.
struct BoundResult {
    double bound_value = 0.0;
    BoundMethod method = BoundMethod::Tangential;
    std::map<std::string, double> optimal_parameters;
    std::optional<std::pair<double, double>> component_energies;  // (E1, E2)
    std::vector<std::pair<std::vector<double>, double>> optimizer_trace;
    bool boundary_infimum = false;  // objective decreases toward the domain
                                    // boundary; bound_value taken along the
                                    // escaping ray, limit in parameters
};

/// Search region and feasibility margins for the two-parameter difference
/// optimization; the defaults are recorded in every BoundResult trace.
struct DifferenceDomain {
    double a_min = 0.05;
    double a_max = 20.0;
    double b_max = 20.0;
    double domination_margin = 1e-3;  // require b - [r^2 coeff of V] >= margin
    int grid_points_per_axis = 8;
};

/// Exact closed-form tangent coefficients at contact t > 0 for mass m >= 0.
TangentCoefficients tangent_coefficients(double mass, double contact);

/// Upper bound min over t > 0 of E(a(t) p^2 + V) + b(t) for the operator
/// sqrt(m^2 + p^2) + V(r); bracketing plus golden-section on t.
BoundResult tangential_bound(double mass, const RadialPotential& potential,
                             const SolverConfig& config = {},
                             double bracket_growth = 2.0);

/// Difference upper bound min over (a, b) of E1(a,b) - E2(a,b), where
/// E1 = ground of b p^2 + sqrt(m^2 + r^2) + a r^2 (the exchanged form of
/// sqrt(m^2+p^2) + a p^2 + b r^2) and E2 = ground of a p^2 + b r^2 - V(r).
/// Requires some feasible b to dominate V. When the optimizer keeps
/// escaping toward the domain boundary the bound is chased along the
/// escaping ray and the extrapolated limit is reported.
BoundResult difference_bound(double mass, const RadialPotential& potential,
                             const SolverConfig& config = {},
                             const DifferenceDomain& domain = {});

/// Reversed construction: min over (a, b) of E2m(a,b) - E1m(a,b) with
/// E2m = ground of a p^2 + b r^2 + V(r) and E1m = ground of
/// b p^2 - sqrt(m^2 + r^2) + a r^2.
BoundResult difference_bound_alt(double mass, const RadialPotential& potential,
                                 const SolverConfig& config = {},
                                 const DifferenceDomain& domain = {});

/// Difference bound for the nonrelativistic operator
/// p^2 + alpha r^4 - beta r^2, split as H1 - H2 with
/// H1 = (1 + w^4) p^2 + alpha r^4 and H2 = w^4 p^2 + beta r^2, so the
/// closed-form objective is e4 ((1+w^4)^2 alpha)^(1/3) - e2 (w^4 beta)^(1/2)
/// minimized over the split parameter w > 0.
BoundResult weyl_nonrel_bound(double alpha, double beta, const SolverConfig& config = {});

/// The closed-form objective above at a given split parameter.
double weyl_nonrel_objective(double alpha, double beta, double omega,
                             const SolverConfig& config = {});

/// One evaluation of the operator-splitting energy inequality
/// E1(a,b) >= E_ref + E2(a,b).
struct WeylInequalityRecord {
    double e1 = 0.0;
    double e2 = 0.0;
    double reference_energy = 0.0;
    double slack = 0.0;  // e1 - reference_energy - e2
    bool satisfied = false;
};

/// Check the energy inequality at a specific feasible (a, b); the reference
/// eigenvalue of sqrt(m^2+p^2) + V comes from reference_energy().
WeylInequalityRecord weyl_inequality_check(double mass, const RadialPotential& potential, double a,
                                           double b, const SolverConfig& config = {},
                                           double tolerance = 1e-6);

/// Reference lowest eigenvalue of sqrt(m^2 + p^2) + V(r) for the exactly
/// solvable shapes: pure-oscillator V via the p <-> r exchange, and the
/// massless pure-linear V via the Hermite-basis estimate. Throws
/// UnsupportedCheck otherwise.
double reference_energy(double mass, const RadialPotential& potential,
                        const SolverConfig& config = {});

/// Component energies of the difference construction (exposed for the
/// scaled-parameter identities and the ultrarelativistic limit checks).
double difference_component_e1(double mass, const RadialPotential& potential, double a, double b,
                               const SolverConfig& config = {});
double difference_component_e2(double mass, const RadialPotential& potential, double a, double b,
                               const SolverConfig& config = {});

}  // namespace salpeter
