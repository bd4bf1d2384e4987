#pragma once

#include <stdexcept>
#include <string>

namespace chaoscrypt {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A map parameter, seed or key field lies outside its valid range.
class DomainError : public Error {
public:
    using Error::Error;
};

/// An orbit left the bounded region of its map.
class DivergenceError : public Error {
public:
    using Error::Error;
};

/// Image or signal geometry does not fit the requested operation.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Zero-variance input to a correlation.
class UndefinedMetricError : public Error {
public:
    using Error::Error;
};

/// Malformed PGM or key file.
class FormatError : public Error {
public:
    using Error::Error;
};

}  // namespace chaoscrypt
