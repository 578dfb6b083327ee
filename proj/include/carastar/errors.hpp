#ifndef CARASTAR_ERRORS_HPP
#define CARASTAR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace carastar {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid parameters or malformed input (bad grid sizes, out-of-range
/// angles, inconsistent coefficient lists, unparsable config values).
class ConfigError : public Error {
public:
    using Error::Error;
};

/// A mathematical precondition failed at evaluation time (argument of zero,
/// pole hit, singular inverse, failed boundary-touch bracketing).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A denominator fell below the zero tolerance (zero of f, f' or p).
class ZeroEncountered : public DomainError {
public:
    using DomainError::DomainError;
};

/// An objective returned a non-finite value during a grid sweep.
class SingularObjective : public DomainError {
public:
    SingularObjective(const std::string& what, double radius, double angle)
        : DomainError(what), radius(radius), angle(angle) {}
    double radius;
    double angle;
};

} // namespace carastar

#endif
