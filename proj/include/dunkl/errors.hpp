#ifndef DUNKL_ERRORS_HPP
#define DUNKL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dunkl {

/// Base class of every library error.  Errors that reject a parameter
/// combination (poles, divisibility conditions, ...) derive from
/// DomainError; the CLI maps those to exit code 3.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DomainError : Error {
    using Error::Error;
};

/// Denominator vanishes at the requested parameter value.
struct PoleError : DomainError {
    using DomainError::DomainError;
};

/// A denominator Pochhammer of a hypergeometric sum vanishes identically
/// while the corresponding numerator term does not.
struct DegenerateParameterError : DomainError {
    using DomainError::DomainError;
};

/// Operands live over a different number of variables.
struct DimensionMismatch : Error {
    using Error::Error;
};

/// Variable or operator index outside 1..N.
struct IndexError : Error {
    using Error::Error;
};

struct ParseError : Error {
    ParseError(const std::string& what, std::ptrdiff_t position = -1)
        : Error(what), pos(position) {}
    std::ptrdiff_t pos;  // byte offset into the input, -1 when unknown
};

/// m < n where m >= n is required.
struct OrderError : DomainError {
    using DomainError::DomainError;
};

struct RangeError : DomainError {
    using DomainError::DomainError;
};

/// Even powers of the alternating polynomial are rejected.
struct EvenPowerError : DomainError {
    using DomainError::DomainError;
};

/// N | n rejected by the omega_{n,0} family.
struct DivisibilityError : DomainError {
    using DomainError::DomainError;
};

/// gcd(N-1, n) >= (N-1)/2 rejected by the omega_{nn} family.
struct GcdError : DomainError {
    using DomainError::DomainError;
};

struct InvalidPartition : DomainError {
    using DomainError::DomainError;
};

}  // namespace dunkl

#endif
