// Acceptance suite: every quantitative reproduction row and sampled
// property, each printed as one PASS/FAIL line with its pinned tolerance.
// The exit code is the number of failed criteria.

#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include "salpeter/bounds.hpp"
#include "salpeter/checks.hpp"
#include "salpeter/oracles.hpp"
#include "salpeter/reproduce.hpp"
#include "salpeter/scaling.hpp"

using namespace salpeter;

namespace {

int failures = 0;

void report(const std::string& id, bool passed, const std::string& detail) {
    if (!passed) ++failures;
    std::printf("%s [%s] %s\n", passed ? "PASS" : "FAIL", id.c_str(), detail.c_str());
}

std::string value_line(const Comparison& row) {
    char buf[512];
    std::snprintf(buf, sizeof(buf), "%s: computed %.8g, reference %.8g, |err| %.2e, tol %.1e (%s)",
                  row.label.c_str(), row.computed, row.reference, row.abs_error, row.tolerance,
                  row.provenance.c_str());
    std::string line = buf;
    if (!row.note.empty()) line += "\n         note: " + row.note;
    return line;
}

const Comparison& find_row(const std::vector<Comparison>& rows, const std::string& label) {
    for (const auto& row : rows)
        if (row.label == label) return row;
    std::fprintf(stderr, "missing reproduction row '%s'\n", label.c_str());
    std::exit(99);
}

}  // namespace

int main() {
    const SolverConfig config;  // defaults pin the spec tolerances
    std::printf("running the reproduction matrix...\n");
    const std::vector<Comparison> rows = run_reproduction_matrix(config);

    auto single = [&](const std::string& id, const std::string& label) {
        const Comparison& row = find_row(rows, label);
        report(id, row.passed, value_line(row));
    };

    single(" 1", "e2_oscillator");
    single(" 2", "e4_quartic");
    single(" 3", "quartic_minus_quadratic");
    single(" 4a", "weyl_nonrel_value");
    single(" 4b", "weyl_nonrel_omega");
    single(" 5", "airy_constant");
    single(" 6a", "tangential_m0_r2");
    single(" 6b", "tangential_m1_r2");
    single(" 6c", "tangential_m0_r1");
    single(" 7", "salpeter_m1_exact");
    single(" 8a", "difference_m0_r2_value");
    single(" 8b", "difference_m0_r2_parameters");
    single(" 8c", "difference_m1_r2_value");
    single(" 8d", "difference_m1_r2_parameters");
    single(" 9a", "linear_limit_s5");
    single(" 9b", "linear_limit_monotone");
    single("10a", "hermite_linear_n32");
    single("10b", "hermite_n1_gaussian");
    single("11", "perturbative_slope");

    // 12: tangent dominance sampling.
    {
        const PropertyReport p = check_tangent_dominance(20050801);
        report("12", p.passed, p.name + ": " + p.detail);
    }
    // 13: energy inequality at random feasible points.
    {
        const PropertyReport p = check_weyl_inequality(20050801, 50, config);
        report("13", p.passed, p.name + ": " + p.detail);
    }
    // 14: bound ordering and validity on the three worked examples.
    {
        const double exact_m0 = find_row(rows, "airy_constant").computed;
        const double exact_m1 = find_row(rows, "salpeter_m1_exact").computed;
        const double exact_lin = find_row(rows, "hermite_linear_n32").computed;
        struct Case {
            const char* name;
            double difference, tangential, exact;
        };
        const Case cases[] = {
            {"m=0 r^2", find_row(rows, "difference_m0_r2_value").computed,
             find_row(rows, "tangential_m0_r2").computed, exact_m0},
            {"m=1 r^2", find_row(rows, "difference_m1_r2_value").computed,
             find_row(rows, "tangential_m1_r2").computed, exact_m1},
            {"m=0 r", find_row(rows, "linear_limit_s5").computed,
             find_row(rows, "tangential_m0_r1").computed, exact_lin},
        };
        bool passed = true;
        std::string detail = "ordering difference < tangential and validity >= exact:";
        for (const Case& c : cases) {
            const bool ordered = c.difference < c.tangential - 1e-3;
            const bool valid = c.difference >= c.exact - 1e-6 && c.tangential >= c.exact - 1e-6;
            passed = passed && ordered && valid;
            char buf[160];
            std::snprintf(buf, sizeof(buf), " [%s: diff %.6g, tang %.6g, exact %.6g%s]", c.name,
                          c.difference, c.tangential, c.exact,
                          ordered && valid ? "" : " VIOLATED");
            detail += buf;
        }
        report("14", passed, detail);
    }
    // 15: scaling round trips.
    {
        const PropertyReport p = check_scaling_roundtrip(20050801, 5, config);
        report("15", p.passed, p.name + ": " + p.detail);
    }
    // 16: the two solver routes agree on every exactly solvable row.
    {
        struct Problem {
            const char* name;
            RadialPotential potential;
        };
        const Problem problems[] = {
            {"p^2+r^2", RadialPotential::power(1.0, 2.0)},
            {"p^2+r^4", RadialPotential::power(1.0, 4.0)},
            {"p^2+r^4-r^2",
             RadialPotential::power(1.0, 4.0).plus(RadialPotential::power(-1.0, 2.0))},
            {"p^2+r", RadialPotential::power(1.0, 1.0)},
            {"p^2+sqrt(1+r^2)", RadialPotential::salpeter(1.0)},
        };
        bool passed = true;
        double worst = 0.0;
        std::string detail = "shooting vs sturm:";
        for (const Problem& problem : problems) {
            SchrodingerProblem p;
            p.potential = problem.potential;
            const double shooting = solve_ground_shooting(p, config).energy;
            const double sturm = solve_ground_sturm(p, config).energy;
            const double gap = std::abs(shooting - sturm);
            worst = std::max(worst, gap);
            if (gap > 10.0 * config.energy_tolerance) {
                passed = false;
                detail += std::string(" ") + problem.name + " DISAGREES";
            }
        }
        char buf[64];
        std::snprintf(buf, sizeof(buf), " worst gap %.2e (allowed %.1e)", worst,
                      10.0 * config.energy_tolerance);
        report("16", passed, detail + buf);
    }

    std::printf("%d criterion(s) failed\n", failures);
    return failures;
}
