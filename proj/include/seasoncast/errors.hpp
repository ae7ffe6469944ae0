#pragma once

#include <stdexcept>
#include <string>

namespace seasoncast {

/// Base class for all library errors. Subclasses exist so callers can
/// distinguish failure kinds without parsing messages.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Configuration / usage errors (CLI exit code 2).
struct ConfigError : Error {
    using Error::Error;
};

// Data ingestion and dataset assembly errors (CLI exit code 3).
struct DataError : Error {
    using Error::Error;
};

struct MissingFile : DataError {
    using DataError::DataError;
};
struct ShapeMismatch : DataError {
    using DataError::DataError;
};
struct NonMonotonicTime : DataError {
    using DataError::DataError;
};
struct DuplicateVariable : DataError {
    using DataError::DataError;
};
struct MissingPrecipitation : DataError {
    using DataError::DataError;
};
struct EmptyVariableList : DataError {
    using DataError::DataError;
};
struct OutOfRangeMonth : DataError {
    using DataError::DataError;
};
struct InsufficientHistory : DataError {
    using DataError::DataError;
};
struct UnknownVariable : DataError {
    using DataError::DataError;
};
struct EmptySet : DataError {
    using DataError::DataError;
};
struct BadFraction : DataError {
    using DataError::DataError;
};

// Numeric / model errors.
struct ZeroVariance : Error {
    using Error::Error;
};
struct DimensionMismatch : Error {
    using Error::Error;
};
struct EmptyData : Error {
    using Error::Error;
};
struct LengthMismatch : Error {
    using Error::Error;
};
struct Empty : Error {
    using Error::Error;
};
struct ConstantObservations : Error {
    using Error::Error;
};
struct GridMismatch : Error {
    using Error::Error;
};
struct SeasonMismatch : Error {
    using Error::Error;
};
struct NonScalarLoss : Error {
    using Error::Error;
};
struct DivergenceDetected : Error {
    using Error::Error;
};
struct TooManyFeatures : Error {
    using Error::Error;
};
struct EmptyBackground : Error {
    using Error::Error;
};
struct Inconsistent : Error {
    using Error::Error;
};
struct IOError : Error {
    using Error::Error;
};

} // namespace seasoncast
