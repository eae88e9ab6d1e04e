#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "salpeter/bounds.hpp"
#include "salpeter/errors.hpp"
#include "salpeter/radial_solver.hpp"

using namespace salpeter;

namespace {

double oscillator_plus_linear_energy(double lambda) {
    SchrodingerProblem p;
    p.potential = RadialPotential::power(1.0, 2.0);
    if (lambda != 0.0) p.potential.add_power(lambda, 1.0);
    return solve_ground_shooting(p).energy;
}

}  // namespace

TEST_CASE("tangent coefficients at the published contact point") {
    const TangentCoefficients tc = tangent_coefficients(1.0, 3.0);
    CHECK(tc.slope == doctest::Approx(0.25));
    CHECK(tc.intercept == doctest::Approx(1.25));
    CHECK(tc.envelope_mu == doctest::Approx(2.0));
    CHECK(3.0 * std::sqrt(tc.slope) + tc.intercept == doctest::Approx(2.75));
}

TEST_CASE("massless tangent parametrization s = 1/(2 sqrt(t)), b = 1/(4s)") {
    for (double t : {0.1, 1.0, 7.3}) {
        const TangentCoefficients tc = tangent_coefficients(0.0, t);
        CHECK(tc.slope == doctest::Approx(1.0 / (2.0 * std::sqrt(t))));
        CHECK(tc.intercept == doctest::Approx(1.0 / (4.0 * tc.slope)));
    }
}

TEST_CASE("nonrelativistic limit of the tangent line") {
    const TangentCoefficients tc = tangent_coefficients(1.0, 1e-12);
    CHECK(tc.slope == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(tc.intercept == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("tangent contact must be positive") {
    CHECK_THROWS_AS(tangent_coefficients(1.0, 0.0), DomainError);
    CHECK_THROWS_AS(tangent_coefficients(1.0, -2.0), DomainError);
    CHECK_THROWS_AS(tangent_coefficients(-1.0, 1.0), DomainError);
}

TEST_CASE("envelope parametrization reproduces the tangent coefficients") {
    // K <= (K^2 + mu^2)/(2 mu) with mu = sqrt(m^2 + t) gives slope 1/(2 mu)
    // and intercept (m^2 + mu^2)/(2 mu), identical to the tangent pair.
    for (double m : {0.0, 1.0, 2.5}) {
        for (double t : {0.05, 1.0, 42.0}) {
            const TangentCoefficients tc = tangent_coefficients(m, t);
            const double mu = std::sqrt(m * m + t);
            CHECK(tc.slope == doctest::Approx(1.0 / (2.0 * mu)).epsilon(1e-15));
            CHECK(tc.intercept == doctest::Approx((m * m + mu * mu) / (2.0 * mu)).epsilon(1e-15));
        }
    }
}

TEST_CASE("tangential bounds match the worked examples") {
    const RadialPotential oscillator = RadialPotential::power(1.0, 2.0);
    const RadialPotential linear = RadialPotential::power(1.0, 1.0);

    const BoundResult m0 = tangential_bound(0.0, oscillator);
    CHECK(std::abs(m0.bound_value - 2.47644) < 1e-4);

    const BoundResult m1 = tangential_bound(1.0, oscillator);
    CHECK(std::abs(m1.bound_value - 2.75) < 1e-5);
    CHECK(std::abs(m1.optimal_parameters.at("t") - 3.0) < 1e-2);

    const BoundResult lin = tangential_bound(0.0, linear);
    CHECK(std::abs(lin.bound_value - 2.3461) < 1e-4);
}

TEST_CASE("tangential bound sits above the exact eigenvalue") {
    const RadialPotential oscillator = RadialPotential::power(1.0, 2.0);
    for (double m : {0.0, 1.0}) {
        const double exact = reference_energy(m, oscillator);
        const BoundResult bound = tangential_bound(m, oscillator);
        CHECK(bound.bound_value >= exact - 1e-6);
    }
}

TEST_CASE("tangential bound refuses non-confining potentials") {
    CHECK_THROWS_AS(tangential_bound(1.0, RadialPotential::power(-1.0, 2.0)),
                    ContinuumSpectrumError);
}

TEST_CASE("split-parameter objective reproduces the published minimum") {
    CHECK(std::abs(weyl_nonrel_objective(1.0, 1.0, 0.818584) - 2.85525) < 1e-4);

    const BoundResult bound = weyl_nonrel_bound(1.0, 1.0);
    CHECK(std::abs(bound.bound_value - 2.85525) < 1e-4);
    CHECK(std::abs(bound.optimal_parameters.at("omega") - 0.818584) < 1e-3);
    CHECK(bound.optimal_parameters.at("split_kinetic_coefficient") ==
          doctest::Approx(std::pow(bound.optimal_parameters.at("omega"), 4.0)));
    // The bound dominates the exact double-well energy.
    CHECK(bound.bound_value > 2.8345362);
}

TEST_CASE("vanishing subtracted coupling recovers the quartic energy") {
    const BoundResult bound = weyl_nonrel_bound(1.0, 1e-8);
    CHECK(std::abs(bound.bound_value - 3.799673) < 1e-3);
    CHECK(bound.optimal_parameters.at("split_kinetic_coefficient") < 0.1);
}

TEST_CASE("weyl objective rejects bad arguments") {
    CHECK_THROWS_AS(weyl_nonrel_objective(0.0, 1.0, 1.0), DomainError);
    CHECK_THROWS_AS(weyl_nonrel_objective(1.0, 1.0, -1.0), DomainError);
    CHECK_THROWS_AS(weyl_nonrel_bound(1.0, 0.0), DomainError);
}

TEST_CASE("energy inequality holds at the published points") {
    const RadialPotential oscillator = RadialPotential::power(1.0, 2.0);

    const WeylInequalityRecord m0 = weyl_inequality_check(0.0, oscillator, 0.59, 3.04);
    CHECK(m0.satisfied);
    CHECK(std::abs(m0.e1 - 5.63456) < 1e-4);
    CHECK(std::abs(m0.e2 - 3.29126) < 1e-4);
    CHECK(std::abs(m0.reference_energy - 2.3381074) < 1e-6);

    const WeylInequalityRecord m1 = weyl_inequality_check(1.0, oscillator, 0.59, 3.53);
    CHECK(m1.satisfied);
    CHECK(std::abs(m1.e2 - 3.66528) < 1e-4);
}

TEST_CASE("energy inequality requires domination and a known reference") {
    const RadialPotential oscillator = RadialPotential::power(1.0, 2.0);
    CHECK_THROWS_AS(weyl_inequality_check(0.0, oscillator, 0.59, 0.9), InfeasibleDomain);
    CHECK_THROWS_AS(reference_energy(0.0, RadialPotential::power(1.0, 4.0)), UnsupportedCheck);
    CHECK_THROWS_AS(reference_energy(1.0, RadialPotential::power(1.0, 1.0)), UnsupportedCheck);
}

TEST_CASE("scaled-parameter identity for the linear case") {
    // E1(a,b) - E2(a,b) = s^2 t^2 [e(1/(s^3 t)) - e(-1/(t^3 s))] with
    // a = s^4, b = t^4 for the massless linear potential.
    const RadialPotential linear = RadialPotential::power(1.0, 1.0);
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> dist(1.1, 2.2);
    for (int i = 0; i < 5; ++i) {
        const double s = dist(rng), t = dist(rng);
        const double a = std::pow(s, 4.0), b = std::pow(t, 4.0);
        const double direct = difference_component_e1(0.0, linear, a, b) -
                              difference_component_e2(0.0, linear, a, b);
        const double s2t2 = s * s * t * t;
        const double scaled =
            s2t2 * (oscillator_plus_linear_energy(1.0 / (s * s * s * t)) -
                    oscillator_plus_linear_energy(-1.0 / (t * t * t * s)));
        CHECK(direct == doctest::Approx(scaled).epsilon(1e-4));
    }
}

TEST_CASE("difference bound is infeasible when nothing dominates") {
    CHECK_THROWS_AS(difference_bound(0.0, RadialPotential::power(1.0, 4.0)), InfeasibleDomain);
    CHECK_THROWS_AS(difference_bound(0.0, RadialPotential::power(25.0, 2.0)), InfeasibleDomain);
    // The reversed orientation fails when b r^2 + V can never confine.
    CHECK_THROWS_AS(difference_bound_alt(0.0, RadialPotential::power(-1.0, 4.0)),
                    InfeasibleDomain);
}

TEST_CASE("difference bound stays between the exact energy and the seeds") {
    const RadialPotential oscillator = RadialPotential::power(1.0, 2.0);
    const BoundResult bound = difference_bound(0.0, oscillator);
    const double exact = reference_energy(0.0, oscillator);
    CHECK(bound.bound_value >= exact - 1e-6);
    CHECK(bound.bound_value < 2.3440);
    REQUIRE(bound.component_energies.has_value());
    CHECK(bound.bound_value ==
          doctest::Approx(bound.component_energies->first - bound.component_energies->second)
              .epsilon(1e-9));
    // The optimum improves on every seeding-grid evaluation.
    for (const auto& [params, value] : bound.optimizer_trace)
        CHECK(bound.bound_value <= value + 1e-9);
}
