#pragma once

#include <stdexcept>
#include <string>

namespace lws {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Tangent plane is lightlike: |EG - F^2| below tolerance.
struct DegeneratePatch : Error {
    using Error::Error;
};

// W changes sign or degenerates across a sampled grid.
struct MixedCausality : Error {
    using Error::Error;
};

// An argument violates the domain of the formula it feeds.
struct DomainViolation : Error {
    using Error::Error;
};

// Quadratic in phi has no real root at the requested point.
struct NegativeDiscriminant : DomainViolation {
    using DomainViolation::DomainViolation;
};

// Degenerate quadratic with no usable fallback root.
struct ZeroDenominator : DomainViolation {
    using DomainViolation::DomainViolation;
};

// Profile interval touches a forbidden locus (u=0, z=0, ...).
struct InvalidDomain : Error {
    using Error::Error;
};

// Orbit of a point fixed by the rotation group.
struct FixedPoint : Error {
    using Error::Error;
};

// Closed-form case requested outside its applicability predicate.
struct InapplicableCase : Error {
    using Error::Error;
};

// Quadric fit needs at least 10 points.
struct InsufficientPoints : Error {
    using Error::Error;
};

// Solver preconditions already fail at the start of the interval.
struct ImmediateDomainViolation : DomainViolation {
    using DomainViolation::DomainViolation;
};

} // namespace lws
