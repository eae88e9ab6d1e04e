#pragma once

#include <stdexcept>
#include <string>

namespace salpeter {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Potential evaluation produced a non-finite value (overflow at large r,
/// or a singular term evaluated at r = 0).
class EvaluationOverflow : public Error {
public:
    using Error::Error;
};

/// A potential literal failed to parse; the message names the offending term.
class PotentialParseError : public Error {
public:
    using Error::Error;
};

/// The operator is not of the p <-> r exchangeable form.
class UnsupportedSwap : public Error {
public:
    using Error::Error;
};

/// The problem has no discrete ground state (potential not confining).
class ContinuumSpectrumError : public Error {
public:
    using Error::Error;
};

/// Eigenvalue bisection could not establish a bracket.
class BracketFailure : public Error {
public:
    using Error::Error;
};

/// The two independent solvers disagree beyond the allowed band.
class OracleMismatch : public Error {
public:
    OracleMismatch(const std::string& what, double shooting, double sturm)
        : Error(what), shooting_energy(shooting), sturm_energy(sturm) {}
    double shooting_energy;
    double sturm_energy;
};

/// A minimization failed to locate an interior optimum.
class OptimizationFailure : public Error {
public:
    using Error::Error;
};

/// The (a, b) search region is empty (domination precondition violated).
class InfeasibleDomain : public Error {
public:
    using Error::Error;
};

/// No reference energy is available for the requested consistency check.
class UnsupportedCheck : public Error {
public:
    using Error::Error;
};

}  // namespace salpeter
