#pragma once

#include <functional>
#include <string>
#include <vector>

#include "salpeter/radial_solver.hpp"

namespace salpeter {

/// One computed-vs-reference comparison of the reproduction matrix.
struct Comparison {
    std::string label;
    double computed = 0.0;
    double reference = 0.0;
    double tolerance = 0.0;    // absolute
    double abs_error = 0.0;
    double rel_error = 0.0;
    std::string provenance;    // where the reference value comes from
    bool passed = false;
    std::string note;          // extra context (escape hatches, recorded digits)
};

/// Runs the full reproduction matrix at the given solver settings. Rows
/// cover the exactly solvable constants, the optimized bounds of every
/// worked example, the ultrarelativistic limit, the Hermite-basis values
/// and the perturbative slope; independent rows run concurrently.
std::vector<Comparison> run_reproduction_matrix(const SolverConfig& config = {});

}  // namespace salpeter
