#include "salpeter/reproduce.hpp"

#include <cmath>
#include <cstdio>
#include <future>
#include <numbers>

#include "salpeter/bounds.hpp"
#include "salpeter/oracles.hpp"
#include "salpeter/scaling.hpp"

namespace salpeter {

namespace {

Comparison make_row(std::string label, double computed, double reference, double tolerance,
                    std::string provenance, std::string note = {}) {
    Comparison row;
    row.label = std::move(label);
    row.computed = computed;
    row.reference = reference;
    row.tolerance = tolerance;
    row.abs_error = std::abs(computed - reference);
    row.rel_error = reference != 0.0 ? row.abs_error / std::abs(reference) : row.abs_error;
    row.provenance = std::move(provenance);
    row.passed = row.abs_error <= tolerance;
    row.note = std::move(note);
    return row;
}

std::string brief(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.7g", x);
    return buf;
}

double solve_exact(const RadialPotential& potential, const SolverConfig& config) {
    SchrodingerProblem problem;
    problem.potential = potential;
    return cross_validate(problem, config).energy;
}

// Difference-bound rows share one optimization per mass: the bound value
// against the published number, and the optimizing parameters against the
// published point with the flat-minimum escape hatch.
std::vector<Comparison> difference_rows(double mass, double ref_value, double ref_a, double ref_b,
                                        const std::string& provenance,
                                        const SolverConfig& config) {
    const RadialPotential oscillator = RadialPotential::power(1.0, 2.0);
    const BoundResult bound = difference_bound(mass, oscillator, config);
    const double at_reference_point =
        difference_component_e1(mass, oscillator, ref_a, ref_b, config) -
        difference_component_e2(mass, oscillator, ref_a, ref_b, config);

    const std::string tag = mass == 0.0 ? "difference_m0_r2" : "difference_m1_r2";
    std::vector<Comparison> rows;
    {
        std::string note = "objective at reference (a,b) = " + brief(at_reference_point);
        if (bound.boundary_infimum)
            note += "; optimizer escaped to the domain edge, limit estimate " +
                    brief(bound.optimal_parameters.at("limit_estimate"));
        rows.push_back(make_row(tag + "_value", bound.bound_value, ref_value, 5e-4, provenance,
                                note));
    }
    {
        const double a = bound.optimal_parameters.at("a");
        const double b = bound.optimal_parameters.at("b");
        const double param_gap = std::max(std::abs(a - ref_a), std::abs(b - ref_b));
        const bool escape = std::abs(at_reference_point - bound.bound_value) <= 5e-4;
        Comparison row = make_row(tag + "_parameters", param_gap, 0.0, 0.05, provenance);
        row.passed = param_gap <= 0.05 || escape;
        row.note = "found (a, b) = (" + brief(a) + ", " + brief(b) + ") vs (" + brief(ref_a) +
                   ", " + brief(ref_b) + ")" +
                   (escape ? "; flat-minimum escape hatch satisfied"
                           : "; escape hatch gap " +
                                 brief(std::abs(at_reference_point - bound.bound_value)));
        rows.push_back(row);
    }
    return rows;
}

}  // namespace

std::vector<Comparison> run_reproduction_matrix(const SolverConfig& config) {
    using Rows = std::vector<Comparison>;
    std::vector<std::future<Rows>> tasks;
    auto submit = [&](std::function<Rows()> f) {
        tasks.push_back(std::async(std::launch::async, std::move(f)));
    };

    submit([&]() -> Rows {
        return {make_row("e2_oscillator", solve_exact(RadialPotential::power(1.0, 2.0), config),
                         3.0, 1e-6, "Eq. (1.6)")};
    });
    submit([&]() -> Rows {
        return {make_row("e4_quartic", solve_exact(RadialPotential::power(1.0, 4.0), config),
                         3.799673, 2e-6, "Eq. (1.6)")};
    });
    submit([&]() -> Rows {
        const RadialPotential v =
            RadialPotential::power(1.0, 4.0).plus(RadialPotential::power(-1.0, 2.0));
        return {make_row("quartic_minus_quadratic", solve_exact(v, config), 2.8345362, 1e-6,
                         "Eq. (1.8)")};
    });
    submit([&]() -> Rows {
        const BoundResult bound = weyl_nonrel_bound(1.0, 1.0, config);
        return {make_row("weyl_nonrel_value", bound.bound_value, 2.85525, 1e-4, "Eq. (1.8)"),
                make_row("weyl_nonrel_omega", bound.optimal_parameters.at("omega"), 0.818584,
                         1e-3, "Eq. (1.8)",
                         "kinetic split coefficient omega^4 = " +
                             brief(bound.optimal_parameters.at("split_kinetic_coefficient")))};
    });
    submit([&]() -> Rows {
        return {make_row("airy_constant", airy_zero(config), 2.3381074, 1e-6, "Sec. 2.1")};
    });
    submit([&]() -> Rows {
        const BoundResult bound = tangential_bound(0.0, RadialPotential::power(1.0, 2.0), config);
        return {make_row("tangential_m0_r2", bound.bound_value, 2.47644, 1e-4, "Sec. 2.1")};
    });
    submit([&]() -> Rows {
        const BoundResult bound = tangential_bound(1.0, RadialPotential::power(1.0, 2.0), config);
        return {make_row("tangential_m1_r2", bound.bound_value, 2.75, 1e-5, "Sec. 2.2",
                         "optimal contact t = " + brief(bound.optimal_parameters.at("t")))};
    });
    submit([&]() -> Rows {
        const BoundResult bound = tangential_bound(0.0, RadialPotential::power(1.0, 1.0), config);
        return {make_row("tangential_m0_r1", bound.bound_value, 2.3461, 1e-4, "Sec. 2.3")};
    });
    submit([&]() -> Rows {
        const double computed = solve_exact(RadialPotential::salpeter(1.0), config);
        return {make_row("salpeter_m1_exact", computed, 2.664016, 1e-6, "Sec. 2.2 / Eq. (4.4)",
                         "computed " + brief(computed) +
                             "; published 7-digit variants 2.6640196 and 2.6640167")};
    });
    submit([&]() -> Rows { return difference_rows(0.0, 2.3433, 0.59, 3.04, "Eq. (4.2)", config); });
    submit([&]() -> Rows { return difference_rows(1.0, 2.6689, 0.59, 3.53, "Eq. (4.4)", config); });
    submit([&]() -> Rows {
        const LinearLimitRecord record = linear_case_limit_check({2.0, 3.0, 4.0, 5.0}, config);
        const double target = 4.0 / std::sqrt(std::numbers::pi);
        Rows rows;
        rows.push_back(make_row("linear_limit_s5", record.differences.back(), target, 1e-2,
                                "Eq. (4.6)",
                                "limit estimate " + brief(record.limit_estimate)));
        Comparison monotone = make_row("linear_limit_monotone",
                                       record.monotone_decreasing ? 1.0 : 0.0, 1.0, 0.5,
                                       "Eq. (4.6)-(4.8)");
        monotone.note = "differences:";
        for (double d : record.differences) monotone.note += " " + brief(d);
        rows.push_back(monotone);
        return rows;
    });
    submit([&]() -> Rows {
        const std::vector<int> sizes{8, 16, 24, 32};
        const std::vector<double> values = hermite_convergence_report(sizes);
        std::string note = "convergence:";
        for (size_t i = 0; i < sizes.size(); ++i)
            note += " N=" + std::to_string(sizes[i]) + ":" + brief(values[i]);
        note += "; published 2.2322 is the 4-decimal truncation of the converged 2.2322864";
        // The published figure truncates the true value, so the digit check
        // accepts either truncation or rounding to it.
        const double v = values.back();
        Comparison digits = make_row("hermite_linear_n32", v, 2.2322, 1e-4, "Sec. 2.3", note);
        digits.passed = std::floor(v * 1e4) == 22322.0 || std::round(v * 1e4) == 22322.0;
        return {digits,
                make_row("hermite_n1_gaussian", hermite_nonlocal_solver({1, 1.0}),
                         4.0 / std::sqrt(std::numbers::pi), 1e-6, "Eq. (4.6)")};
    });
    submit([&]() -> Rows {
        return {make_row("perturbative_slope", perturbed_oscillator_slope(config),
                         2.0 / std::sqrt(std::numbers::pi), 1e-4, "Eq. (4.8)",
                         "reference 2/sqrt(pi)")};
    });

    std::vector<Comparison> table;
    for (auto& task : tasks)
        for (auto& row : task.get()) table.push_back(std::move(row));
    return table;
}

}  // namespace salpeter
