#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "salpeter/errors.hpp"
#include "salpeter/scaling.hpp"

using namespace salpeter;

TEST_CASE("base energies come from the solver, not constants") {
    CHECK(std::abs(base_energy(2.0).base_energy - 3.0) < 1e-6);
    CHECK(std::abs(base_energy(4.0).base_energy - 3.799673) < 2e-6);
    CHECK(std::abs(base_energy(1.0).base_energy - 2.3381074) < 1e-6);
}

TEST_CASE("coupling scaling law") {
    const PowerBaseEnergy e2{2.0, 3.0};
    for (double omega : {0.25, 1.7, 9.0})
        CHECK(scale_energy(e2, omega) == doctest::Approx(3.0 * std::sqrt(omega)));
    CHECK(scale_energy(e2, 1.0) == doctest::Approx(3.0));

    const PowerBaseEnergy e4 = base_energy(4.0);
    const double omega = 0.818584;
    CHECK(scale_kinetic(e4, 1.0 + omega, 1.0) ==
          doctest::Approx(e4.base_energy * std::cbrt((1.0 + omega) * (1.0 + omega))));
}

TEST_CASE("kinetic reduction matches the effective-coupling form exactly") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> dist(0.2, 5.0);
    for (double q : {1.0, 2.0, 4.0}) {
        const PowerBaseEnergy base{q, q + 1.7};  // synthetic base energy
        for (int i = 0; i < 20; ++i) {
            const double c = dist(rng), v = dist(rng);
            const double reduced = scale_kinetic(base, c, v);
            const double effective = scale_energy(base, v * std::pow(c, q / 2.0));
            CHECK(reduced == doctest::Approx(effective).epsilon(1e-14));
        }
    }
}

TEST_CASE("scaling round-trips against direct solves") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> log_v(std::log(0.1), std::log(10.0));
    for (double q : {1.0, 2.0, 4.0}) {
        const PowerBaseEnergy base = base_energy(q);
        for (int i = 0; i < 2; ++i) {
            const double v = std::exp(log_v(rng));
            SchrodingerProblem p;
            p.potential = RadialPotential::power(v, q);
            const double direct = cross_validate(p).energy;
            CHECK(scale_energy(base, v) == doctest::Approx(direct).epsilon(1e-5));
            CHECK(scale_kinetic(base, 1.0, v) == doctest::Approx(direct).epsilon(1e-5));
        }
    }
}

TEST_CASE("linear-exponent kinetic scaling") {
    // s p^2 + r has ground energy s^(1/3) times the unit value.
    const PowerBaseEnergy airy = base_energy(1.0);
    for (double s : {0.5, 2.0, 8.0}) {
        SchrodingerProblem p;
        p.kinetic_coefficient = s;
        p.potential = RadialPotential::power(1.0, 1.0);
        const double direct = cross_validate(p).energy;
        CHECK(scale_kinetic(airy, s, 1.0) == doctest::Approx(direct).epsilon(1e-6));
        CHECK(scale_kinetic(airy, s, 1.0) ==
              doctest::Approx(std::cbrt(s) * airy.base_energy).epsilon(1e-12));
    }
}

TEST_CASE("domain errors") {
    const PowerBaseEnergy e2{2.0, 3.0};
    CHECK_THROWS_AS(scale_energy(e2, 0.0), DomainError);
    CHECK_THROWS_AS(scale_energy(e2, -1.0), DomainError);
    CHECK_THROWS_AS(scale_kinetic(e2, 0.0, 1.0), DomainError);
    CHECK_THROWS_AS(base_energy(-2.0), DomainError);
    CHECK_THROWS_AS(base_energy(0.0), DomainError);
}
