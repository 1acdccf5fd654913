#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace knotcord {

/// Invalid user-supplied input. CLI maps this family to exit code 1.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Square presentation matrix with zero determinant; the quotient is not finite.
struct SingularPresentation : InputError {
    using InputError::InputError;
};

struct ZeroPolynomial : InputError {
    using InputError::InputError;
};

struct NotAUnit : InputError {
    using InputError::InputError;
};

struct InvalidBridgeParams : InputError {
    using InputError::InputError;
};

/// Matrix fails a Seifert-matrix invariant (square, even size, unimodular skew part).
struct SeifertFormError : InputError {
    using InputError::InputError;
};

struct NotQuadratic : InputError {
    using InputError::InputError;
};

struct NotAKnotPolynomial : InputError {
    using InputError::InputError;
};

struct NotAMetabolizer : InputError {
    using InputError::InputError;
};

/// Enumeration refused: the instance exceeds the desk-scale budget. Exit code 3.
struct BudgetExceeded : std::runtime_error {
    BudgetExceeded(std::string what, std::string tripped_bound)
        : std::runtime_error(std::move(what)), bound(std::move(tripped_bound)) {}
    std::string bound;
};

/// Internal invariant violations. Exit code 2.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

/// A character class was skipped before being proven zero at a higher level.
struct UnresolvedDependency : InternalError {
    using InternalError::InternalError;
};

/// A level relation had zero resultant; the certificate chain cannot close.
struct ReplayFailure : InternalError {
    ReplayFailure(std::string what, unsigned failed_level, std::string failed_relation)
        : InternalError(std::move(what)), level(failed_level), relation(std::move(failed_relation)) {}
    unsigned level;
    std::string relation;
};

} // namespace knotcord
