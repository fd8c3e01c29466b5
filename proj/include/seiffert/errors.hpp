#pragma once

#include <stdexcept>
#include <string>

namespace seiffert {

/// An argument lies outside the domain of the operation (non-positive pair,
/// p < 1/2, t outside [1/2, 1], ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A scan could not classify the sign of f: every grid value fell inside the
/// near-zero band, or the grid cannot resolve the requested feature.
class IndeterminateError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two independent evaluation routes disagree, or a predicate that must be
/// monotone is not. Signals a kernel bug rather than bad input.
class InconsistencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace seiffert
