// Command-line front end: individual bound computations, raw radial
// solves, the full reference-table reproduction, and the sampled property
// checks, with machine-readable JSON/CSV output.

#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "salpeter/bounds.hpp"
#include "salpeter/checks.hpp"
#include "salpeter/errors.hpp"
#include "salpeter/oracles.hpp"
#include "salpeter/reproduce.hpp"
#include "salpeter/scaling.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;
using namespace salpeter;

// Exit codes shared with the test suite.
constexpr int kExitFailure = 1;      // failed comparison or property
constexpr int kExitParse = 2;        // potential literal parse error
constexpr int kExitOptimization = 3; // no interior optimum
constexpr int kExitInfeasible = 4;   // domination precondition violated

std::string full_precision(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string seven_digits(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.7g", v);
    return buf;
}

struct GlobalOptions {
    std::optional<double> tol;
    std::optional<int> grid_points;
    std::optional<double> r_max;
    std::optional<std::uint64_t> seed;
    std::string config_path;
    bool json = false;
    bool csv = false;
};

struct EffectiveSettings {
    SolverConfig solver;
    DifferenceDomain domain;
    std::uint64_t seed = 20050801;
};

EffectiveSettings resolve_settings(const GlobalOptions& options) {
    EffectiveSettings s;
    if (!options.config_path.empty()) {
        std::ifstream in(options.config_path);
        if (!in) throw Error("cannot open config file '" + options.config_path + "'");
        std::string line;
        while (std::getline(in, line)) {
            const auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            const auto eq = line.find('=');
            if (eq == std::string::npos) continue;
            auto strip = [](std::string v) {
                while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front())))
                    v.erase(v.begin());
                while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back())))
                    v.pop_back();
                return v;
            };
            const std::string key = strip(line.substr(0, eq));
            const std::string value = strip(line.substr(eq + 1));
            if (key.empty() || value.empty()) continue;
            if (key == "energy_tolerance") s.solver.energy_tolerance = std::stod(value);
            else if (key == "grid_points") s.solver.grid_points = std::stoi(value);
            else if (key == "max_bisections") s.solver.max_bisections = std::stoi(value);
            else if (key == "r_max") s.solver.r_max = std::stod(value);
            else if (key == "a_min") s.domain.a_min = std::stod(value);
            else if (key == "a_max") s.domain.a_max = std::stod(value);
            else if (key == "b_max") s.domain.b_max = std::stod(value);
            else if (key == "domination_margin") s.domain.domination_margin = std::stod(value);
            else if (key == "seed") s.seed = std::stoull(value);
            else throw Error("unknown config key '" + key + "'");
        }
    }
    if (options.tol) s.solver.energy_tolerance = *options.tol;
    if (options.grid_points) s.solver.grid_points = *options.grid_points;
    if (options.r_max) s.solver.r_max = *options.r_max;
    if (options.seed) s.seed = *options.seed;
    return s;
}

ordered_json settings_json(const EffectiveSettings& s) {
    ordered_json j;
    j["energy_tolerance"] = full_precision(s.solver.energy_tolerance);
    j["grid_points"] = std::to_string(s.solver.grid_points);
    j["max_bisections"] = std::to_string(s.solver.max_bisections);
    j["r_max"] = s.solver.r_max ? full_precision(*s.solver.r_max) : "adaptive";
    return j;
}

std::string settings_line(const EffectiveSettings& s) {
    std::ostringstream out;
    out << "settings: energy_tolerance=" << full_precision(s.solver.energy_tolerance)
        << " grid_points=" << s.solver.grid_points << " max_bisections=" << s.solver.max_bisections
        << " r_max=" << (s.solver.r_max ? full_precision(*s.solver.r_max) : "adaptive");
    return out.str();
}

ordered_json bound_json(const BoundResult& r) {
    ordered_json j;
    switch (r.method) {
        case BoundMethod::Tangential: j["method"] = "tangential"; break;
        case BoundMethod::Difference: j["method"] = "difference"; break;
        case BoundMethod::DifferenceAlt: j["method"] = "difference_alt"; break;
        case BoundMethod::WeylNonRel: j["method"] = "weyl_nonrelativistic"; break;
    }
    j["bound_value"] = full_precision(r.bound_value);
    ordered_json params;
    for (const auto& [name, value] : r.optimal_parameters) params[name] = full_precision(value);
    j["optimal_parameters"] = params;
    if (r.component_energies) {
        j["E1"] = full_precision(r.component_energies->first);
        j["E2"] = full_precision(r.component_energies->second);
    }
    j["boundary_infimum"] = r.boundary_infimum;
    j["trace_evaluations"] = std::to_string(r.optimizer_trace.size());
    return j;
}

ordered_json eigen_json(const EigenResult& r) {
    ordered_json j;
    j["energy"] = full_precision(r.energy);
    j["method"] = r.method == SolveMethod::Shooting ? "shooting" : "sturm_fd";
    j["node_count"] = std::to_string(r.node_count);
    j["residual"] = full_precision(r.residual);
    j["r_max_used"] = full_precision(r.r_max_used);
    return j;
}

ordered_json comparison_json(const Comparison& c) {
    ordered_json j;
    j["label"] = c.label;
    j["computed"] = full_precision(c.computed);
    j["reference"] = full_precision(c.reference);
    j["tolerance"] = full_precision(c.tolerance);
    j["abs_error"] = full_precision(c.abs_error);
    j["rel_error"] = full_precision(c.rel_error);
    j["provenance"] = c.provenance;
    j["status"] = c.passed ? "PASS" : "FAIL";
    if (!c.note.empty()) j["note"] = c.note;
    return j;
}

class ReportPrinter {
public:
    ReportPrinter(std::string command, const GlobalOptions& options, const EffectiveSettings& s)
        : command_(std::move(command)), options_(options), settings_(s),
          start_(std::chrono::steady_clock::now()) {}

    void add_input(const std::string& key, const std::string& value) { inputs_[key] = value; }
    void add_result(ordered_json j) { results_.push_back(std::move(j)); }
    void add_comparison(const Comparison& c) { comparisons_.push_back(c); }
    void set_text(std::string text) { text_ = std::move(text); }

    void emit() const {
        if (options_.json) {
            ordered_json report;
            report["command"] = command_;
            ordered_json inputs = inputs_;
            inputs["settings"] = settings_json(settings_);
            report["inputs"] = inputs;
            report["results"] = results_;
            ordered_json comparisons = ordered_json::array();
            for (const auto& c : comparisons_) comparisons.push_back(comparison_json(c));
            report["comparisons"] = comparisons;
            const double seconds =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
            report["wall_time_s"] = full_precision(seconds);
            std::cout << report.dump(2) << "\n";
        } else if (options_.csv) {
            std::cout << "label,computed,reference,abs_error,rel_error,provenance\n";
            for (const auto& c : comparisons_)
                std::cout << c.label << "," << full_precision(c.computed) << ","
                          << full_precision(c.reference) << "," << full_precision(c.abs_error)
                          << "," << full_precision(c.rel_error) << ",\"" << c.provenance << "\"\n";
        } else {
            std::cout << text_;
        }
    }

private:
    std::string command_;
    const GlobalOptions& options_;
    const EffectiveSettings& settings_;
    std::chrono::steady_clock::time_point start_;
    ordered_json inputs_ = ordered_json::object();
    std::vector<ordered_json> results_;
    std::vector<Comparison> comparisons_;
    std::string text_;
};

int cmd_tangential(double mass, const std::string& literal, const GlobalOptions& options) {
    const EffectiveSettings settings = resolve_settings(options);
    const RadialPotential potential = parse_potential(literal);
    ReportPrinter report("tangential", options, settings);
    report.add_input("mass", full_precision(mass));
    report.add_input("potential", potential.to_string());

    const BoundResult bound = tangential_bound(mass, potential, settings.solver);
    report.add_result(bound_json(bound));

    std::ostringstream out;
    out << "tangential upper bound for sqrt(m^2+p^2) + V,  m = " << seven_digits(mass)
        << ",  V = " << potential.to_string() << "\n";
    out << "  bound      = " << seven_digits(bound.bound_value) << "\n";
    out << "  contact t  = " << seven_digits(bound.optimal_parameters.at("t")) << "\n";
    out << "  a(t)       = " << seven_digits(bound.optimal_parameters.at("a")) << "\n";
    out << "  b(t)       = " << seven_digits(bound.optimal_parameters.at("b")) << "\n";
    out << "  mu         = " << seven_digits(bound.optimal_parameters.at("mu")) << "\n";
    out << "  evaluations = " << bound.optimizer_trace.size() << "\n";
    report.set_text(out.str());
    report.emit();
    return 0;
}

int cmd_difference(double mass, const std::string& literal, bool alt,
                   const GlobalOptions& options) {
    const EffectiveSettings settings = resolve_settings(options);
    const RadialPotential potential = parse_potential(literal);
    ReportPrinter report(alt ? "difference --alt" : "difference", options, settings);
    report.add_input("mass", full_precision(mass));
    report.add_input("potential", potential.to_string());
    report.add_input("alt", alt ? "true" : "false");

    const BoundResult bound = alt ? difference_bound_alt(mass, potential, settings.solver,
                                                         settings.domain)
                                  : difference_bound(mass, potential, settings.solver,
                                                     settings.domain);
    report.add_result(bound_json(bound));

    std::ostringstream out;
    out << (alt ? "reversed difference" : "difference") << " upper bound for sqrt(m^2+p^2) + V,  m = "
        << seven_digits(mass) << ",  V = " << potential.to_string() << "\n";
    out << "  bound            = " << seven_digits(bound.bound_value) << "\n";
    out << "  a                = " << seven_digits(bound.optimal_parameters.at("a")) << "\n";
    out << "  b                = " << seven_digits(bound.optimal_parameters.at("b")) << "\n";
    out << "  E1               = " << seven_digits(bound.component_energies->first) << "\n";
    out << "  E2               = " << seven_digits(bound.component_energies->second) << "\n";
    out << "  boundary_infimum = " << (bound.boundary_infimum ? "true" : "false") << "\n";
    if (bound.boundary_infimum)
        out << "  limit            = "
            << seven_digits(bound.optimal_parameters.at("limit_estimate")) << "\n";
    out << "  evaluations      = " << bound.optimizer_trace.size() << "\n";
    report.set_text(out.str());
    report.emit();
    return 0;
}

int cmd_weyl(double alpha, double beta, const GlobalOptions& options) {
    const EffectiveSettings settings = resolve_settings(options);
    ReportPrinter report("weyl", options, settings);
    report.add_input("alpha", full_precision(alpha));
    report.add_input("beta", full_precision(beta));

    const BoundResult bound = weyl_nonrel_bound(alpha, beta, settings.solver);
    report.add_result(bound_json(bound));

    std::ostringstream out;
    out << "difference upper bound for p^2 + alpha r^4 - beta r^2,  alpha = "
        << seven_digits(alpha) << ",  beta = " << seven_digits(beta) << "\n";
    out << "  bound   = " << seven_digits(bound.bound_value) << "\n";
    out << "  omega   = " << seven_digits(bound.optimal_parameters.at("omega"))
        << "   (kinetic split omega^4 = "
        << seven_digits(bound.optimal_parameters.at("split_kinetic_coefficient")) << ")\n";
    out << "  E1      = " << seven_digits(bound.component_energies->first) << "\n";
    out << "  E2      = " << seven_digits(bound.component_energies->second) << "\n";
    report.set_text(out.str());
    report.emit();
    return 0;
}

int cmd_solve(double kinetic, const std::string& literal, const std::string& method,
              const GlobalOptions& options) {
    const EffectiveSettings settings = resolve_settings(options);
    const RadialPotential potential = parse_potential(literal);
    ReportPrinter report("solve", options, settings);
    report.add_input("kinetic_coefficient", full_precision(kinetic));
    report.add_input("potential", potential.to_string());
    report.add_input("method", method);

    SchrodingerProblem problem;
    problem.kinetic_coefficient = kinetic;
    problem.potential = potential;
    EigenResult result;
    if (method == "shooting") result = solve_ground_shooting(problem, settings.solver);
    else if (method == "sturm") result = solve_ground_sturm(problem, settings.solver);
    else if (method == "cross") result = cross_validate(problem, settings.solver);
    else throw Error("unknown method '" + method + "' (expected shooting, sturm, or cross)");
    report.add_result(eigen_json(result));

    std::ostringstream out;
    out << "ground energy of " << seven_digits(kinetic) << "*p^2 + " << potential.to_string()
        << "\n";
    out << "  energy   = " << seven_digits(result.energy) << "\n";
    out << "  method   = " << (result.method == SolveMethod::Shooting ? "shooting" : "sturm_fd")
        << (method == "cross" ? " (cross-validated)" : "") << "\n";
    out << "  nodes    = " << result.node_count << "\n";
    out << "  residual = " << seven_digits(result.residual) << "\n";
    out << "  r_max    = " << seven_digits(result.r_max_used) << "\n";
    report.set_text(out.str());
    report.emit();
    return 0;
}

int cmd_reproduce(const GlobalOptions& options) {
    const EffectiveSettings settings = resolve_settings(options);
    ReportPrinter report("reproduce-paper", options, settings);

    const std::vector<Comparison> table = run_reproduction_matrix(settings.solver);
    bool all_passed = true;
    for (const auto& row : table) {
        report.add_comparison(row);
        all_passed = all_passed && row.passed;
    }

    std::ostringstream out;
    out << settings_line(settings) << "\n";
    out << "label                     computed       reference      abs_err    rel_err    status  provenance\n";
    for (const auto& row : table) {
        char line[256];
        std::snprintf(line, sizeof(line), "%-25s %-14.7g %-14.7g %-10.2e %-10.2e %-7s %s\n",
                      row.label.c_str(), row.computed, row.reference, row.abs_error,
                      row.rel_error, row.passed ? "PASS" : "FAIL", row.provenance.c_str());
        out << line;
        if (!row.note.empty()) out << "    note: " << row.note << "\n";
    }
    out << (all_passed ? "all rows PASS\n" : "some rows FAIL\n");
    report.set_text(out.str());
    report.emit();
    return all_passed ? 0 : kExitFailure;
}

int cmd_check(const GlobalOptions& options) {
    const EffectiveSettings settings = resolve_settings(options);
    ReportPrinter report("check", options, settings);
    report.add_input("seed", std::to_string(settings.seed));

    const std::vector<PropertyReport> reports =
        run_property_checks(settings.seed, settings.solver);
    bool all_passed = true;
    std::ostringstream out;
    out << "seed " << settings.seed << "\n";
    for (const auto& p : reports) {
        all_passed = all_passed && p.passed;
        ordered_json j;
        j["property"] = p.name;
        j["status"] = p.passed ? "PASS" : "FAIL";
        j["samples"] = std::to_string(p.samples);
        j["violations"] = std::to_string(p.violations);
        j["detail"] = p.detail;
        report.add_result(j);
        char line[512];
        std::snprintf(line, sizeof(line), "%-4s %-20s %s\n", p.passed ? "PASS" : "FAIL",
                      p.name.c_str(), p.detail.c_str());
        out << line;
    }
    report.set_text(out.str());
    report.emit();
    return all_passed ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Schrodinger upper bounds to the ground energy of semirelativistic operators "
                 "sqrt(m^2+p^2) + V(r)"};
    app.require_subcommand(1);

    GlobalOptions options;
    double mass = 0.0, alpha = 1.0, beta = 1.0, kinetic = 1.0;
    std::string literal, method = "cross";
    bool alt = false;

    auto add_common = [&](CLI::App* cmd, bool with_csv = false) {
        cmd->add_option("--tol", options.tol, "solver energy tolerance");
        cmd->add_option("--grid", options.grid_points, "radial grid points");
        cmd->add_option("--rmax", options.r_max, "fixed integration cutoff");
        cmd->add_option("--config", options.config_path, "key=value settings file");
        cmd->add_flag("--json", options.json, "machine-readable report");
        if (with_csv) cmd->add_flag("--csv", options.csv, "comparison table as CSV");
    };

    auto* tangential = app.add_subcommand("tangential", "optimized tangential upper bound");
    tangential->add_option("--mass", mass, "kinetic mass m")->required();
    tangential->add_option("--potential", literal, "potential literal")->required();
    add_common(tangential);

    auto* difference = app.add_subcommand("difference", "optimized difference upper bound");
    difference->add_option("--mass", mass, "kinetic mass m")->required();
    difference->add_option("--potential", literal, "potential literal")->required();
    difference->add_flag("--alt", alt, "reversed add/subtract orientation");
    add_common(difference);

    auto* weyl = app.add_subcommand("weyl", "nonrelativistic quartic-minus-quadratic bound");
    weyl->add_option("--alpha", alpha, "quartic coupling")->required();
    weyl->add_option("--beta", beta, "subtracted quadratic coupling")->required();
    add_common(weyl);

    auto* solve = app.add_subcommand("solve", "raw radial ground-state solve");
    solve->add_option("--potential", literal, "potential literal")->required();
    solve->add_option("--kinetic", kinetic, "coefficient of p^2");
    solve->add_option("--method", method, "shooting | sturm | cross");
    add_common(solve);

    auto* reproduce = app.add_subcommand("reproduce-paper", "recompute the reference table");
    add_common(reproduce, /*with_csv=*/true);

    auto* check = app.add_subcommand("check", "sampled property checks");
    check->add_option("--seed", options.seed, "sampling seed");
    add_common(check);

    CLI11_PARSE(app, argc, argv);

    try {
        if (tangential->parsed()) return cmd_tangential(mass, literal, options);
        if (difference->parsed()) return cmd_difference(mass, literal, alt, options);
        if (weyl->parsed()) return cmd_weyl(alpha, beta, options);
        if (solve->parsed()) return cmd_solve(kinetic, literal, method, options);
        if (reproduce->parsed()) return cmd_reproduce(options);
        if (check->parsed()) return cmd_check(options);
    } catch (const PotentialParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const OptimizationFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitOptimization;
    } catch (const InfeasibleDomain& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return 0;
}
