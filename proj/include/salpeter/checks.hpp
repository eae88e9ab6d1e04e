#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "salpeter/radial_solver.hpp"

namespace salpeter {

/// Outcome of one sampled property suite.
struct PropertyReport {
    std::string name;
    bool passed = false;
    int samples = 0;
    int violations = 0;
    double worst_slack = 0.0;   // most negative margin observed
    std::string detail;         // falsifying instance or summary
};

/// Tangent dominance: a(t) x + b(t) >= sqrt(m^2 + x) over sampled (t, x)
/// for m in {0, 1}, with near-equality at the contact point.
PropertyReport check_tangent_dominance(std::uint64_t seed);

/// Energy inequality E1 >= E_ref + E2 at random feasible (a, b) for the
/// two exactly solvable oscillator cases (m = 0 and m = 1).
PropertyReport check_weyl_inequality(std::uint64_t seed, int samples_per_case = 50,
                                     const SolverConfig& config = {});

/// Coupling scaling law against direct solves for q in {1, 2, 4}.
PropertyReport check_scaling_roundtrip(std::uint64_t seed, int couplings_per_exponent = 5,
                                       const SolverConfig& config = {});

/// Three independent routes to the Airy constant agree pairwise.
PropertyReport check_oracle_triangle(const SolverConfig& config = {});

/// All four suites with one seed; used by the check subcommand.
std::vector<PropertyReport> run_property_checks(std::uint64_t seed,
                                                const SolverConfig& config = {});

}  // namespace salpeter
