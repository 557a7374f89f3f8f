#pragma once

#include <stdexcept>
#include <string>

namespace geospec {

// Error taxonomy. The CLI maps these onto process exit codes:
//   ConfigError -> 2, IoError -> 3, IntegrityError -> 4, NumericError -> 5.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Persistent data that fails a consistency check (digest/version mismatch).
struct IntegrityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct VersionError : IntegrityError {
    using IntegrityError::IntegrityError;
};

// A runtime numerical invariant failed (parity residue too large, etc.).
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Domain errors raised by the math layer.
struct NonHyperbolicError : std::domain_error {
    using std::domain_error::domain_error;
};

struct NotInGroupError : std::domain_error {
    using std::domain_error::domain_error;
};

struct BadParametersError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct BackingMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct EmptyWindowError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct WindowBeyondCertifiedRangeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InsufficientRangeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OutsideConvergenceRegionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EnumerationBudgetError : std::runtime_error {
    EnumerationBudgetError(const std::string& msg, double suggested)
        : std::runtime_error(msg), suggested_cutoff(suggested) {}
    double suggested_cutoff;
};

}  // namespace geospec
