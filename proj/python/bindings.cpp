#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "salpeter/bounds.hpp"
#include "salpeter/checks.hpp"
#include "salpeter/errors.hpp"
#include "salpeter/oracles.hpp"
#include "salpeter/potentials.hpp"
#include "salpeter/radial_solver.hpp"
#include "salpeter/scaling.hpp"

namespace py = pybind11;
using namespace salpeter;

namespace {

SolverConfig config_from_kwargs(std::optional<double> tol, std::optional<int> grid_points,
                                std::optional<double> r_max) {
    SolverConfig config;
    if (tol) config.energy_tolerance = *tol;
    if (grid_points) config.grid_points = *grid_points;
    if (r_max) config.r_max = *r_max;
    return config;
}

std::string method_name(BoundMethod m) {
    switch (m) {
        case BoundMethod::Tangential: return "tangential";
        case BoundMethod::Difference: return "difference";
        case BoundMethod::DifferenceAlt: return "difference_alt";
        case BoundMethod::WeylNonRel: return "weyl_nonrelativistic";
    }
    return "?";
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Schrodinger upper bounds to the ground energy of semirelativistic operators "
              "sqrt(m^2+p^2) + V(r)";

    py::register_exception<PotentialParseError>(m, "PotentialParseError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainArgumentError", PyExc_ValueError);
    py::register_exception<UnsupportedSwap>(m, "UnsupportedSwapError", PyExc_ValueError);
    py::register_exception<InfeasibleDomain>(m, "InfeasibleDomainError", PyExc_ValueError);
    py::register_exception<Error>(m, "SalpeterError", PyExc_RuntimeError);

    py::class_<SalpeterTerm>(m, "SalpeterTerm")
        .def(py::init<double, int>(), py::arg("mass"), py::arg("sign") = 1)
        .def_readonly("mass", &SalpeterTerm::mass)
        .def_readonly("sign", &SalpeterTerm::sign);

    py::class_<RadialPotential>(m, "RadialPotential")
        .def(py::init<>())
        .def_static("power", &RadialPotential::power, py::arg("coefficient"),
                    py::arg("exponent"))
        .def_static("salpeter", &RadialPotential::salpeter, py::arg("mass"), py::arg("sign") = 1)
        .def("add_power", &RadialPotential::add_power, py::arg("coefficient"),
             py::arg("exponent"))
        .def("add_salpeter", &RadialPotential::add_salpeter, py::arg("mass"),
             py::arg("sign") = 1)
        .def("add_constant", &RadialPotential::add_constant, py::arg("value"))
        .def("plus", &RadialPotential::plus)
        .def("negated", &RadialPotential::negated)
        .def("evaluate", &RadialPotential::evaluate, py::arg("r"))
        .def("__call__", &RadialPotential::evaluate, py::arg("r"))
        .def_property_readonly("growth_exponent",
                               [](const RadialPotential& v) { return v.growth_exponent(); })
        .def_property_readonly("confining", &RadialPotential::confining)
        .def("__str__", &RadialPotential::to_string)
        .def("__repr__",
             [](const RadialPotential& v) { return "RadialPotential('" + v.to_string() + "')"; });

    m.def("parse_potential", [](const std::string& text) { return parse_potential(text); },
          py::arg("literal"), "Parse a potential literal like 'r^2 + salpeter(m=1)'.");
    m.def("dominates", &dominates, py::arg("oscillator_coefficient"), py::arg("potential"));

    py::class_<SchrodingerProblem>(m, "SchrodingerProblem")
        .def(py::init([](double kinetic, const RadialPotential& potential,
                         std::optional<SalpeterTerm> kinetic_salpeter) {
                 SchrodingerProblem p;
                 p.kinetic_coefficient = kinetic;
                 p.potential = potential;
                 p.kinetic_salpeter = kinetic_salpeter;
                 return p;
             }),
             py::arg("kinetic_coefficient"), py::arg("potential"),
             py::arg("kinetic_salpeter") = std::nullopt)
        .def_readwrite("kinetic_coefficient", &SchrodingerProblem::kinetic_coefficient)
        .def_readwrite("potential", &SchrodingerProblem::potential)
        .def_property_readonly("is_local", &SchrodingerProblem::is_local);

    m.def("fourier_swap", &fourier_swap, py::arg("problem"),
          "Exchange p and r in an operator of the form F(p) + b r^2.");

    py::class_<EigenResult>(m, "EigenResult")
        .def_readonly("energy", &EigenResult::energy)
        .def_readonly("node_count", &EigenResult::node_count)
        .def_readonly("residual", &EigenResult::residual)
        .def_readonly("r_max_used", &EigenResult::r_max_used)
        .def_property_readonly("method",
                               [](const EigenResult& r) {
                                   return r.method == SolveMethod::Shooting ? "shooting"
                                                                            : "sturm_fd";
                               })
        .def("__repr__", [](const EigenResult& r) {
            return "EigenResult(energy=" + std::to_string(r.energy) + ")";
        });

    auto solve_wrapper = [](const std::variant<std::string, RadialPotential>& potential,
                            double kinetic, const std::string& method, std::optional<double> tol,
                            std::optional<int> grid_points, std::optional<double> r_max) {
        SchrodingerProblem problem;
        problem.kinetic_coefficient = kinetic;
        problem.potential = std::holds_alternative<std::string>(potential)
                                ? parse_potential(std::get<std::string>(potential))
                                : std::get<RadialPotential>(potential);
        const SolverConfig config = config_from_kwargs(tol, grid_points, r_max);
        if (method == "shooting") return solve_ground_shooting(problem, config);
        if (method == "sturm") return solve_ground_sturm(problem, config);
        if (method == "cross") return cross_validate(problem, config);
        throw DomainError("method must be shooting, sturm, or cross");
    };
    m.def("solve_ground", solve_wrapper, py::arg("potential"), py::arg("kinetic") = 1.0,
          py::arg("method") = "cross", py::arg("tol") = std::nullopt,
          py::arg("grid_points") = std::nullopt, py::arg("r_max") = std::nullopt,
          "Lowest s-wave eigenvalue of kinetic * p^2 + V(r).");

    py::class_<TangentCoefficients>(m, "TangentCoefficients")
        .def_readonly("contact", &TangentCoefficients::contact)
        .def_readonly("slope", &TangentCoefficients::slope)
        .def_readonly("intercept", &TangentCoefficients::intercept)
        .def_readonly("envelope_mu", &TangentCoefficients::envelope_mu);
    m.def("tangent_coefficients", &tangent_coefficients, py::arg("mass"), py::arg("contact"));

    py::class_<BoundResult>(m, "BoundResult")
        .def_readonly("bound_value", &BoundResult::bound_value)
        .def_readonly("optimal_parameters", &BoundResult::optimal_parameters)
        .def_readonly("component_energies", &BoundResult::component_energies)
        .def_readonly("boundary_infimum", &BoundResult::boundary_infimum)
        .def_property_readonly("method",
                               [](const BoundResult& r) { return method_name(r.method); })
        .def_property_readonly("evaluations",
                               [](const BoundResult& r) { return r.optimizer_trace.size(); })
        .def("__repr__", [](const BoundResult& r) {
            return "BoundResult(" + method_name(r.method) +
                   ", bound_value=" + std::to_string(r.bound_value) + ")";
        });

    auto as_potential = [](const std::variant<std::string, RadialPotential>& potential) {
        return std::holds_alternative<std::string>(potential)
                   ? parse_potential(std::get<std::string>(potential))
                   : std::get<RadialPotential>(potential);
    };

    m.def(
        "tangential_bound",
        [=](const std::variant<std::string, RadialPotential>& potential, double mass,
            std::optional<double> tol, std::optional<int> grid_points,
            std::optional<double> r_max) {
            return tangential_bound(mass, as_potential(potential),
                                    config_from_kwargs(tol, grid_points, r_max));
        },
        py::arg("potential"), py::arg("mass"), py::arg("tol") = std::nullopt,
        py::arg("grid_points") = std::nullopt, py::arg("r_max") = std::nullopt,
        "Optimized tangential upper bound for sqrt(mass^2 + p^2) + V.");

    m.def(
        "difference_bound",
        [=](const std::variant<std::string, RadialPotential>& potential, double mass, bool alt,
            std::optional<double> tol, std::optional<int> grid_points,
            std::optional<double> r_max) {
            const SolverConfig config = config_from_kwargs(tol, grid_points, r_max);
            return alt ? difference_bound_alt(mass, as_potential(potential), config)
                       : difference_bound(mass, as_potential(potential), config);
        },
        py::arg("potential"), py::arg("mass"), py::arg("alt") = false,
        py::arg("tol") = std::nullopt, py::arg("grid_points") = std::nullopt,
        py::arg("r_max") = std::nullopt,
        "Optimized difference upper bound for sqrt(mass^2 + p^2) + V.");

    m.def("weyl_nonrel_bound",
          [](double alpha, double beta) { return weyl_nonrel_bound(alpha, beta); },
          py::arg("alpha"), py::arg("beta"),
          "Difference bound for p^2 + alpha r^4 - beta r^2.");
    m.def("weyl_nonrel_objective",
          [](double alpha, double beta, double omega) {
              return weyl_nonrel_objective(alpha, beta, omega);
          },
          py::arg("alpha"), py::arg("beta"), py::arg("omega"));

    py::class_<WeylInequalityRecord>(m, "WeylInequalityRecord")
        .def_readonly("e1", &WeylInequalityRecord::e1)
        .def_readonly("e2", &WeylInequalityRecord::e2)
        .def_readonly("reference_energy", &WeylInequalityRecord::reference_energy)
        .def_readonly("slack", &WeylInequalityRecord::slack)
        .def_readonly("satisfied", &WeylInequalityRecord::satisfied);
    m.def(
        "weyl_inequality_check",
        [=](const std::variant<std::string, RadialPotential>& potential, double mass, double a,
            double b) { return weyl_inequality_check(mass, as_potential(potential), a, b); },
        py::arg("potential"), py::arg("mass"), py::arg("a"), py::arg("b"));

    py::class_<PowerBaseEnergy>(m, "PowerBaseEnergy")
        .def_readonly("exponent", &PowerBaseEnergy::exponent)
        .def_readonly("base_energy", &PowerBaseEnergy::base_energy);
    m.def("base_energy", [](double q) { return base_energy(q); }, py::arg("exponent"));
    m.def("scale_energy", &scale_energy, py::arg("base"), py::arg("coupling"));
    m.def("scale_kinetic", &scale_kinetic, py::arg("base"), py::arg("kinetic_coefficient"),
          py::arg("coupling"));

    m.def("hermite_nonlocal_solver",
          [](int basis_size, double scale) {
              return hermite_nonlocal_solver({basis_size, scale});
          },
          py::arg("basis_size") = 32, py::arg("scale") = 1.0,
          "Variational bottom of |p| + r in the form-invariant Hermite basis.");
    m.def("hermite_convergence_report", &hermite_convergence_report, py::arg("basis_sizes"),
          py::arg("scale") = 1.0);
    m.def("airy_zero", []() { return airy_zero(); });
    m.def("perturbed_oscillator_slope", []() { return perturbed_oscillator_slope(); });

    py::class_<LinearLimitRecord>(m, "LinearLimitRecord")
        .def_readonly("s_values", &LinearLimitRecord::s_values)
        .def_readonly("differences", &LinearLimitRecord::differences)
        .def_readonly("excess_ratios", &LinearLimitRecord::excess_ratios)
        .def_readonly("limit_estimate", &LinearLimitRecord::limit_estimate)
        .def_readonly("monotone_decreasing", &LinearLimitRecord::monotone_decreasing)
        .def_readonly("symmetric_beats_asymmetric",
                      &LinearLimitRecord::symmetric_beats_asymmetric);
    m.def("linear_case_limit_check",
          [](const std::vector<double>& s_values) { return linear_case_limit_check(s_values); },
          py::arg("s_values"));
}
