#include "salpeter/checks.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "salpeter/bounds.hpp"
#include "salpeter/oracles.hpp"
#include "salpeter/scaling.hpp"

namespace salpeter {

namespace {

std::string format_instance(double a, double b) {
    std::ostringstream out;
    out << "(a = " << a << ", b = " << b << ")";
    return out.str();
}

}  // namespace

PropertyReport check_tangent_dominance(std::uint64_t seed) {
    PropertyReport report;
    report.name = "tangent_dominance";
    report.worst_slack = 0.0;
    std::mt19937_64 rng(seed);

    for (double mass : {0.0, 1.0}) {
        const double x_span = 100.0 * (mass * mass + 1.0);
        std::uniform_real_distribution<double> log_t(std::log(1e-3 * (mass * mass + 1.0)),
                                                     std::log(1e3 * (mass * mass + 1.0)));
        std::uniform_real_distribution<double> x_dist(0.0, x_span);
        for (int i = 0; i < 20; ++i) {
            const double t = std::exp(log_t(rng));
            const TangentCoefficients tc = tangent_coefficients(mass, t);
            for (int j = 0; j < 200; ++j) {
                const double x = x_dist(rng);
                const double slack = tc.slope * x + tc.intercept - std::sqrt(mass * mass + x);
                ++report.samples;
                report.worst_slack = std::min(report.worst_slack, slack);
                if (slack < -1e-12) {
                    ++report.violations;
                    if (report.detail.empty()) {
                        std::ostringstream out;
                        out << "violated at m = " << mass << ", t = " << t << ", x = " << x
                            << " (slack " << slack << ")";
                        report.detail = out.str();
                    }
                }
            }
            // Equality at the contact point itself.
            const double at_contact = tc.slope * t + tc.intercept - std::sqrt(mass * mass + t);
            ++report.samples;
            if (std::abs(at_contact) > 1e-10) {
                ++report.violations;
                std::ostringstream out;
                out << "contact-point gap " << at_contact << " at m = " << mass << ", t = " << t;
                report.detail = out.str();
            }
        }
    }
    report.passed = report.violations == 0;
    if (report.passed) {
        std::ostringstream out;
        out << report.samples << " samples, worst slack " << report.worst_slack;
        report.detail = out.str();
    }
    return report;
}

PropertyReport check_weyl_inequality(std::uint64_t seed, int samples_per_case,
                                     const SolverConfig& config) {
    PropertyReport report;
    report.name = "weyl_inequality";
    report.worst_slack = std::numeric_limits<double>::infinity();
    std::mt19937_64 rng(seed);

    const RadialPotential oscillator = RadialPotential::power(1.0, 2.0);
    for (double mass : {0.0, 1.0}) {
        std::uniform_real_distribution<double> log_a(std::log(0.05), std::log(20.0));
        std::uniform_real_distribution<double> log_b(std::log(1.001), std::log(20.0));
        for (int i = 0; i < samples_per_case; ++i) {
            const double a = std::exp(log_a(rng));
            const double b = std::exp(log_b(rng));
            const WeylInequalityRecord record =
                weyl_inequality_check(mass, oscillator, a, b, config);
            ++report.samples;
            report.worst_slack = std::min(report.worst_slack, record.slack);
            if (!record.satisfied) {
                ++report.violations;
                if (report.detail.empty())
                    report.detail = "violated at m = " + std::to_string(mass) + " " +
                                    format_instance(a, b) + ", slack " +
                                    std::to_string(record.slack);
            }
        }
    }
    report.passed = report.violations == 0;
    if (report.passed) {
        std::ostringstream out;
        out << report.samples << " samples, worst slack " << report.worst_slack;
        report.detail = out.str();
    }
    return report;
}

PropertyReport check_scaling_roundtrip(std::uint64_t seed, int couplings_per_exponent,
                                       const SolverConfig& config) {
    PropertyReport report;
    report.name = "scaling_roundtrip";
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> log_v(std::log(0.1), std::log(10.0));

    double worst = 0.0;
    for (double q : {1.0, 2.0, 4.0}) {
        const PowerBaseEnergy base = base_energy(q, config);
        for (int i = 0; i < couplings_per_exponent; ++i) {
            const double v = std::exp(log_v(rng));
            SchrodingerProblem problem;
            problem.potential = RadialPotential::power(v, q);
            const double direct = cross_validate(problem, config).energy;
            const double scaled = scale_energy(base, v);
            const double relative = std::abs(scaled - direct) / std::abs(direct);
            ++report.samples;
            worst = std::max(worst, relative);
            if (relative > 1e-5) {
                ++report.violations;
                if (report.detail.empty()) {
                    std::ostringstream out;
                    out << "q = " << q << ", v = " << v << ": scaled " << scaled << " vs direct "
                        << direct << " (rel " << relative << ")";
                    report.detail = out.str();
                }
            }
        }
    }
    report.worst_slack = -worst;
    report.passed = report.violations == 0;
    if (report.passed) {
        std::ostringstream out;
        out << report.samples << " round trips, worst relative error " << worst;
        report.detail = out.str();
    }
    return report;
}

PropertyReport check_oracle_triangle(const SolverConfig& config) {
    PropertyReport report;
    report.name = "oracle_triangle";

    // Route 1: cross-validated solve of p^2 + r.
    const double direct = airy_zero(config);

    // Route 2: exchange p + r^2 and solve the local image.
    SchrodingerProblem nonlocal;
    nonlocal.kinetic_coefficient = 0.0;
    nonlocal.kinetic_salpeter = SalpeterTerm{0.0, +1};
    nonlocal.potential = RadialPotential::power(1.0, 2.0);
    const double swapped = cross_validate(fourier_swap(nonlocal), config).energy;

    // Route 3: invert the closed-form tangential bound for the massless
    // linear potential, B = (4/3) (3 A^3 / 4)^(1/4).
    const double bound =
        tangential_bound(0.0, RadialPotential::power(1.0, 1.0), config).bound_value;
    const double inverted = std::cbrt(std::pow(3.0 * bound / 4.0, 4.0) * 4.0 / 3.0);

    const double d12 = std::abs(direct - swapped);
    const double d13 = std::abs(direct - inverted);
    const double d23 = std::abs(swapped - inverted);
    const double worst = std::max({d12, d13, d23});
    report.samples = 3;
    report.worst_slack = -worst;
    report.violations = worst <= 1e-5 ? 0 : 1;
    report.passed = report.violations == 0;
    std::ostringstream out;
    out << "direct " << direct << ", exchanged " << swapped << ", tangential-inverted " << inverted
        << " (max pairwise gap " << worst << ")";
    report.detail = out.str();
    return report;
}

std::vector<PropertyReport> run_property_checks(std::uint64_t seed, const SolverConfig& config) {
    return {check_tangent_dominance(seed), check_weyl_inequality(seed, 50, config),
            check_scaling_roundtrip(seed, 5, config), check_oracle_triangle(config)};
}

}  // namespace salpeter
