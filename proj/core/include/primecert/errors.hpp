#pragma once

#include <stdexcept>
#include <string>

namespace primecert {

/// Base class for all errors raised by the verifier.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Input outside the mathematical domain of an operation (x <= 0 for log, ...).
struct DomainError : Error {
    using Error::Error;
};

/// A requested enclosure width could not be met within the configured
/// series-length cap.  Never silently returns a wider interval.
struct PrecisionError : Error {
    using Error::Error;
};

/// Work or memory beyond the configured caps (sieve limit, census size, ...).
struct ResourceError : Error {
    using Error::Error;
};

/// Malformed configuration or arguments.
struct UsageError : Error {
    using Error::Error;
};

/// Ratio R_r(i) requested where the denominator density is zero (i < r).
struct UndefinedRatioError : DomainError {
    using DomainError::DomainError;
};

} // namespace primecert
