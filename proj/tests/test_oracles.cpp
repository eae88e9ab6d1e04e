#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "salpeter/checks.hpp"
#include "salpeter/errors.hpp"
#include "salpeter/oracles.hpp"
#include "salpeter/radial_solver.hpp"

using namespace salpeter;

TEST_CASE("single-function estimate is the Gaussian expectation 4/sqrt(pi)") {
    const double value = hermite_nonlocal_solver({1, 1.0});
    CHECK(value == doctest::Approx(4.0 / std::sqrt(std::numbers::pi)).epsilon(1e-9));
}

TEST_CASE("variational estimates are non-increasing in the basis size") {
    const std::vector<double> values = hermite_convergence_report({1, 2, 4, 8, 16, 24, 32});
    for (size_t i = 1; i < values.size(); ++i) CHECK(values[i] <= values[i - 1] + 1e-12);
}

TEST_CASE("thirty-two functions give the published 4-digit value") {
    const double value = hermite_nonlocal_solver({32, 1.0});
    // The published 2.2322 truncates the converged 2.2322864; by N = 32 the
    // estimate is within 2e-7 of that limit.
    CHECK(std::floor(value * 1e4) == 22322.0);
    CHECK(value == doctest::Approx(2.2322864).epsilon(5e-7));
}

TEST_CASE("the scale enters reciprocally, so unit scale is optimal") {
    const double at_unit = hermite_nonlocal_solver({16, 1.0});
    CHECK(hermite_nonlocal_solver({16, 1.3}) > at_unit);
    CHECK(hermite_nonlocal_solver({16, 0.7}) > at_unit);
}

TEST_CASE("orthonormalized basis has an identity overlap matrix") {
    const int n = 32;
    const std::vector<double> gram = hermite_gram_matrix(n);
    double worst = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double expected = i == j ? 1.0 : 0.0;
            worst = std::max(worst, std::abs(gram[i * n + j] - expected));
        }
    CHECK(worst < 1e-12);
}

TEST_CASE("r-matrix is symmetric with the exact single-function element") {
    const int n = 8;
    const std::vector<double> r = hermite_r_matrix(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            CHECK(r[i * n + j] == doctest::Approx(r[j * n + i]).epsilon(1e-14));
    CHECK(r[0] == doctest::Approx(2.0 / std::sqrt(std::numbers::pi)).epsilon(1e-12));
}

TEST_CASE("basis size must be positive") {
    CHECK_THROWS_AS(hermite_nonlocal_solver({0, 1.0}), DomainError);
    CHECK_THROWS_AS(hermite_nonlocal_solver({8, 0.0}), DomainError);
}

TEST_CASE("airy constant from the solver") {
    CHECK(std::abs(airy_zero() - 2.3381074) < 1e-6);
}

TEST_CASE("oracle consistency triangle") {
    const PropertyReport report = check_oracle_triangle();
    INFO(report.detail);
    CHECK(report.passed);
}

TEST_CASE("perturbative slope matches the Gaussian expectation 2/sqrt(pi)") {
    const double slope = perturbed_oscillator_slope();
    CHECK(std::abs(slope - 2.0 / std::sqrt(std::numbers::pi)) < 1e-4);
}

TEST_CASE("perturbed oscillator: unperturbed value and quadratic residual") {
    SchrodingerProblem p;
    p.potential = RadialPotential::power(1.0, 2.0);
    CHECK(std::abs(cross_validate(p).energy - 3.0) < 1e-6);

    auto e = [](double lambda) {
        SchrodingerProblem q;
        q.potential = RadialPotential::power(1.0, 2.0);
        q.potential.add_power(lambda, 1.0);
        return solve_ground_shooting(q).energy;
    };
    // e(lambda) + e(-lambda) - 6 is quadratic in lambda: quadrupling under
    // a doubled step.
    const double r1 = e(0.02) + e(-0.02) - 6.0;
    const double r2 = e(0.04) + e(-0.04) - 6.0;
    CHECK(r2 / r1 == doctest::Approx(4.0).epsilon(0.1));
}

TEST_CASE("diagonal ultrarelativistic scan decreases toward 4/sqrt(pi)") {
    const LinearLimitRecord record = linear_case_limit_check({2.0, 3.0});
    const double target = 4.0 / std::sqrt(std::numbers::pi);
    CHECK(record.differences.front() > target);
    CHECK(record.monotone_decreasing);
    CHECK(record.symmetric_beats_asymmetric);
    CHECK(record.differences.back() > target - 1e-9);
    CHECK_THROWS_AS(linear_case_limit_check({3.0, 2.0}), DomainError);
    CHECK_THROWS_AS(linear_case_limit_check({}), DomainError);
}
