#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace salpeter {

/// One term coefficient * r^exponent of a central potential.
///
/// The sign convention for attractive singular powers is absorbed into the
/// coefficient: v * sgn(q) * r^q is stored as a single signed coefficient.
struct PowerTerm {
    double coefficient = 0.0;  // signed, energy * length^(-exponent)
    double exponent = 0.0;     // q, restricted to q > -2, q != 0
};

/// The coordinate-space square-root term sign * sqrt(mass^2 + r^2).
struct SalpeterTerm {
    double mass = 0.0;  // m >= 0
    int sign = +1;      // +1 or -1
};

/// Symbolic central potential: a sum of signed power terms, an optional
/// sqrt(m^2 + r^2) term, and a constant offset.
///
/// Potentials are kept symbolic (term lists rather than callables) so that
/// structural operations -- the p <-> r exchange, domination tests, term
/// algebra -- stay decidable. Terms with equal exponents are merged on
/// insertion; a term whose merged coefficient cancels to zero is dropped.
class RadialPotential {
public:
    RadialPotential() = default;

    /// Single power term c * r^q.
    static RadialPotential power(double coefficient, double exponent);

    /// sign * sqrt(mass^2 + r^2). A massless term is normalized to the
    /// exact equivalent power term sign * r.
    static RadialPotential salpeter(double mass, int sign = +1);

    RadialPotential& add_power(double coefficient, double exponent);
    RadialPotential& add_salpeter(double mass, int sign = +1);
    RadialPotential& add_constant(double value);

    /// Term-wise sum of two potentials.
    RadialPotential plus(const RadialPotential& other) const;

    /// Potential with every term negated.
    RadialPotential negated() const;

    /// Value at radius r >= 0. Throws DomainError for r < 0 or when a
    /// negative-exponent term is evaluated at r = 0; throws
    /// EvaluationOverflow when the result is not finite.
    double evaluate(double r) const;

    /// Net coefficient of r^exponent after merging (0 if absent).
    double coefficient_of(double exponent) const;

    /// Exponent governing growth at large r, present iff the potential is
    /// confining (tends to +infinity). The square-root term counts as an
    /// effective linear term sign * r for this analysis.
    std::optional<double> growth_exponent() const;

    bool confining() const { return growth_exponent().has_value(); }

    const std::vector<PowerTerm>& power_terms() const { return power_terms_; }
    const std::optional<SalpeterTerm>& salpeter_term() const { return salpeter_; }
    double constant_offset() const { return constant_offset_; }

    /// Render in the literal syntax accepted by parse_potential.
    std::string to_string() const;

private:
    std::vector<PowerTerm> power_terms_;  // sorted by descending exponent
    std::optional<SalpeterTerm> salpeter_;
    double constant_offset_ = 0.0;
};

/// True iff b * r^2 - V(r) -> +infinity as r -> infinity, decided
/// symbolically: every power term of V with q >= 2 must have q == 2 and
/// coefficient < b; the square-root term is always dominated.
bool dominates(double oscillator_coefficient, const RadialPotential& potential);

/// Parse a potential literal: a sum of terms like "r^2", "-1.0*r^2",
/// "0.5*r^4", "salpeter(m=1)", "salpeter(m=0)", plus bare constants.
/// Throws PotentialParseError naming the offending term.
RadialPotential parse_potential(std::string_view text);

/// Radial operator kinetic_coefficient * p^2 [+ sign * sqrt(m^2 + p^2)]
/// + potential(r), s-wave unless angular_momentum says otherwise.
///
/// The optional kinetic square-root term exists so the exchangeable
/// semirelativistic forms can be written down directly; the eigensolvers
/// accept only local problems (no kinetic square-root term).
struct SchrodingerProblem {
    double kinetic_coefficient = 1.0;
    std::optional<SalpeterTerm> kinetic_salpeter;
    RadialPotential potential;
    int angular_momentum = 0;

    bool is_local() const { return !kinetic_salpeter.has_value(); }
};

/// Exchange p and r in an operator of the form F(p) + b * r^2, where F is
/// c * p^2 and/or +-sqrt(m^2 + p^2): returns the spectrally equivalent
/// b * p^2 + F(r). The constant offset rides along. Throws UnsupportedSwap
/// when the potential is not a pure oscillator or no kinetic term exists.
SchrodingerProblem fourier_swap(const SchrodingerProblem& problem);

}  // namespace salpeter
