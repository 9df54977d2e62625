#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace ashyp {

/// Base of the library's error taxonomy. The CLI maps subclasses to exit codes.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A point is too close to the boundary sphere for stable ball-model arithmetic.
struct NumericalDegeneracy : Error {
    using Error::Error;
};

/// Two configuration points are closer than the separation tolerance.
struct DegenerateRay : Error {
    using Error::Error;
};

struct InvalidPoint : Error {
    using Error::Error;
};

/// A pairwise bracket in the normalized-determinant denominator is (numerically) zero.
struct DegenerateDenominator : Error {
    using Error::Error;
};

struct SingularSubstitution : Error {
    using Error::Error;
};

/// An exact certificate did not match the expected sign census.
struct CertificateFailed : Error {
    using Error::Error;
};

struct VerificationFailed : Error {
    using Error::Error;
};

/// A numeric value fell below a proven bound. Never swallowed: this would be a
/// counterexample and is always surfaced to the caller.
struct BoundViolated : Error {
    using Error::Error;
};

struct NotCoplanar : Error {
    using Error::Error;
};

struct SamplingExhausted : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

/// Requested n exceeds the symbolic/numeric enumeration cap.
struct CapExceeded : Error {
    CapExceeded(const std::string& msg, std::string required)
        : Error(msg), required_terms(std::move(required)) {}

    std::string required_terms;  // decimal term count that would be needed
};

}  // namespace ashyp
