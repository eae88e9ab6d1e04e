#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "salpeter/errors.hpp"
#include "salpeter/potentials.hpp"
#include "salpeter/radial_solver.hpp"

using namespace salpeter;

TEST_CASE("evaluate sums signed powers, square-root term, and offset") {
    CHECK(RadialPotential::power(1.0, 2.0).evaluate(2.0) == doctest::Approx(4.0));
    CHECK(RadialPotential::salpeter(1.0).evaluate(0.0) == doctest::Approx(1.0));

    const RadialPotential quartic_minus_quadratic =
        RadialPotential::power(1.0, 4.0).plus(RadialPotential::power(-1.0, 2.0));
    CHECK(quartic_minus_quadratic.evaluate(1.0) == doctest::Approx(0.0));

    RadialPotential with_offset = RadialPotential::power(0.5, 2.0);
    with_offset.add_constant(1.25);
    CHECK(with_offset.evaluate(2.0) == doctest::Approx(3.25));
}

TEST_CASE("evaluate rejects bad radii and overflow") {
    CHECK_THROWS_AS(RadialPotential::power(1.0, 2.0).evaluate(-1.0), DomainError);
    CHECK_THROWS_AS(RadialPotential::power(-1.0, -0.5).evaluate(0.0), DomainError);
    CHECK_THROWS_AS(RadialPotential::power(1.0, 4.0).evaluate(1e200), EvaluationOverflow);
}

TEST_CASE("evaluate is monotone in a positive coefficient at fixed r") {
    for (double r : {0.3, 1.0, 4.7}) {
        double previous = RadialPotential::power(0.5, 2.0).evaluate(r);
        for (double c : {0.8, 1.1, 2.9}) {
            double value = RadialPotential::power(c, 2.0).evaluate(r);
            CHECK(value > previous);
            previous = value;
        }
    }
}

TEST_CASE("term merging cancels equal exponents") {
    RadialPotential v = RadialPotential::power(1.0, 2.0);
    v.add_power(-1.0, 2.0);
    CHECK(v.power_terms().empty());
    CHECK_FALSE(v.confining());
}

TEST_CASE("power term invariants are enforced") {
    RadialPotential v;
    CHECK_THROWS_AS(v.add_power(1.0, -2.0), DomainError);
    CHECK_THROWS_AS(v.add_power(1.0, 0.0), DomainError);
    CHECK_THROWS_AS(v.add_power(0.0, 2.0), DomainError);
}

TEST_CASE("growth exponent tracks the dominant large-r term") {
    CHECK(RadialPotential::power(1.0, 2.0).growth_exponent() == 2.0);
    CHECK(RadialPotential::salpeter(1.0).growth_exponent() == 1.0);
    CHECK_FALSE(RadialPotential::power(-1.0, 2.0).confining());
    // A negative quartic beats a positive quadratic at large r.
    const RadialPotential sinking =
        RadialPotential::power(1.0, 2.0).plus(RadialPotential::power(-0.2, 4.0));
    CHECK_FALSE(sinking.confining());
    // The square-root term cancels against -r: the remainder decays.
    RadialPotential cancelled = RadialPotential::salpeter(2.0);
    cancelled.add_power(-1.0, 1.0);
    CHECK_FALSE(cancelled.confining());
}

TEST_CASE("dominates follows the symbolic rule") {
    const RadialPotential oscillator = RadialPotential::power(1.0, 2.0);
    CHECK(dominates(3.04, oscillator));
    CHECK_FALSE(dominates(1.0, oscillator));
    CHECK_FALSE(dominates(0.5, RadialPotential::power(1.0, 4.0)));
    CHECK(dominates(0.5, RadialPotential::salpeter(1.0)));
    CHECK(dominates(0.5, RadialPotential::power(3.0, 1.0)));
}

TEST_CASE("domination is monotone in the oscillator coefficient") {
    const RadialPotential v =
        RadialPotential::power(1.3, 2.0).plus(RadialPotential::power(2.0, 1.0));
    double previous_b = 0.0;
    bool seen_true = false;
    for (double b : {0.5, 1.0, 1.31, 2.0, 9.0}) {
        if (dominates(previous_b, v)) CHECK(dominates(b, v));
        seen_true = seen_true || dominates(b, v);
        previous_b = b;
    }
    CHECK(seen_true);
}

TEST_CASE("potential literals parse") {
    CHECK(parse_potential("r^2").evaluate(2.0) == doctest::Approx(4.0));
    CHECK(parse_potential("-1.0*r^2").evaluate(2.0) == doctest::Approx(-4.0));
    CHECK(parse_potential("0.5*r^4 - r^2").evaluate(2.0) == doctest::Approx(4.0));
    CHECK(parse_potential("salpeter(m=1)").evaluate(0.0) == doctest::Approx(1.0));
    CHECK(parse_potential("r").evaluate(3.0) == doctest::Approx(3.0));
    CHECK(parse_potential("r^1 + 2.5").evaluate(3.0) == doctest::Approx(5.5));
    CHECK(parse_potential("1e-3*r^2").evaluate(2.0) == doctest::Approx(4e-3));

    // salpeter(m=0) means +r exactly.
    const RadialPotential massless = parse_potential("salpeter(m=0)");
    CHECK(massless.power_terms().size() == 1);
    CHECK(massless.power_terms()[0].exponent == 1.0);
    CHECK_FALSE(massless.salpeter_term().has_value());
}

TEST_CASE("parse errors name the offending term") {
    CHECK_THROWS_WITH_AS(parse_potential("r^2 + q^3"), doctest::Contains("q^3"),
                         PotentialParseError);
    CHECK_THROWS_WITH_AS(parse_potential("r^-3"), doctest::Contains("r^-3"), PotentialParseError);
    CHECK_THROWS_WITH_AS(parse_potential("salpeter(mass=1)"), doctest::Contains("salpeter"),
                         PotentialParseError);
    CHECK_THROWS_WITH_AS(parse_potential("2*salpeter(m=1)"), doctest::Contains("salpeter"),
                         PotentialParseError);
    CHECK_THROWS_AS(parse_potential(""), PotentialParseError);
    CHECK_THROWS_AS(parse_potential("r^0"), PotentialParseError);
}

TEST_CASE("fourier_swap exchanges kinetic and oscillator structure") {
    SUBCASE("salpeter plus oscillator pieces") {
        SchrodingerProblem p;
        p.kinetic_coefficient = 0.7;  // a
        p.kinetic_salpeter = SalpeterTerm{1.5, +1};
        p.potential = RadialPotential::power(3.2, 2.0);  // b r^2
        const SchrodingerProblem swapped = fourier_swap(p);
        CHECK(swapped.kinetic_coefficient == doctest::Approx(3.2));
        CHECK_FALSE(swapped.kinetic_salpeter.has_value());
        CHECK(swapped.potential.coefficient_of(2.0) == doctest::Approx(0.7));
        REQUIRE(swapped.potential.salpeter_term().has_value());
        CHECK(swapped.potential.salpeter_term()->mass == doctest::Approx(1.5));
        CHECK(swapped.potential.salpeter_term()->sign == 1);
    }
    SUBCASE("p + r^2 becomes p^2 + r") {
        SchrodingerProblem p;
        p.kinetic_coefficient = 0.0;
        p.kinetic_salpeter = SalpeterTerm{0.0, +1};
        p.potential = RadialPotential::power(1.0, 2.0);
        const SchrodingerProblem swapped = fourier_swap(p);
        CHECK(swapped.kinetic_coefficient == doctest::Approx(1.0));
        REQUIRE(swapped.potential.power_terms().size() == 1);
        CHECK(swapped.potential.power_terms()[0].exponent == doctest::Approx(1.0));
        CHECK(swapped.potential.power_terms()[0].coefficient == doctest::Approx(1.0));
    }
    SUBCASE("the symmetric oscillator is self-dual") {
        SchrodingerProblem p;
        p.potential = RadialPotential::power(1.0, 2.0);
        const SchrodingerProblem swapped = fourier_swap(p);
        CHECK(swapped.kinetic_coefficient == doctest::Approx(1.0));
        CHECK(swapped.potential.coefficient_of(2.0) == doctest::Approx(1.0));
    }
}

TEST_CASE("fourier_swap rejects non-oscillator potentials") {
    SchrodingerProblem p;
    p.potential = RadialPotential::power(1.0, 4.0);
    CHECK_THROWS_AS(fourier_swap(p), UnsupportedSwap);
    p.potential = RadialPotential::power(1.0, 2.0).plus(RadialPotential::power(1.0, 1.0));
    CHECK_THROWS_AS(fourier_swap(p), UnsupportedSwap);
    p.potential = RadialPotential::power(1.0, 2.0);
    p.kinetic_coefficient = 0.0;
    CHECK_THROWS_AS(fourier_swap(p), UnsupportedSwap);
}

TEST_CASE("swapped local problems keep their lowest eigenvalue") {
    SolverConfig config;
    for (auto [c, b] : {std::pair{1.0, 1.0}, {0.4, 2.7}, {3.0, 0.2}}) {
        SchrodingerProblem p;
        p.kinetic_coefficient = c;
        p.potential = RadialPotential::power(b, 2.0);
        const double direct = cross_validate(p, config).energy;
        const double swapped = cross_validate(fourier_swap(p), config).energy;
        CHECK(swapped == doctest::Approx(direct).epsilon(1e-7));
    }
}
