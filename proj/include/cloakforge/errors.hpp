#pragma once

#include <stdexcept>
#include <string>

namespace cloakforge {

/// Base class for all computation errors raised by this library.
/// Argument validation failures use std::invalid_argument / std::domain_error
/// directly; everything that can only be detected mid-computation derives
/// from Error so callers can map it to a single exit path.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Transfer product lost all scale (|p22| underflowed or went non-finite).
class DegenerateStructureError : public Error {
public:
    using Error::Error;
};

/// Spectrum truncation search exceeded the hard order cap.
class NonConvergenceError : public Error {
public:
    using Error::Error;
};

/// Power-log series has a zero or log-contaminated leading coefficient.
class NotInvertibleError : public Error {
public:
    using Error::Error;
};

/// A nonzero series coefficient landed beyond the log-power capacity.
class TruncationCapacityError : public Error {
public:
    using Error::Error;
};

/// Boundary-integral mode system is numerically singular.
class NearResonanceError : public Error {
public:
    using Error::Error;
};

/// Point lies outside the region where the radial map is inverted.
class OutsideImageError : public Error {
public:
    using Error::Error;
};

/// Jacobian requested at the origin of a radial map.
class SingularPointError : public Error {
public:
    using Error::Error;
};

/// Configuration file failed structural validation.
class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace cloakforge
