#pragma once

#include <stdexcept>
#include <string>

namespace vsaogm {

// Base of every error thrown by the library. The CLI maps the three
// categories below onto process exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad configuration or argument values (CLI exit code 2).
class ConfigError : public Error {
public:
    using Error::Error;
};

// Malformed or unusable input data (CLI exit code 3).
class DataError : public Error {
public:
    using Error::Error;
};

// Numeric invariant violated at runtime (CLI exit code 4).
class NumericError : public Error {
public:
    using Error::Error;
};

class InvalidArgument : public ConfigError {
public:
    using ConfigError::ConfigError;
};

class DimensionMismatch : public ConfigError {
public:
    using ConfigError::ConfigError;
};

class FusionPreconditionError : public ConfigError {
public:
    using ConfigError::ConfigError;
};

class EmptyInput : public DataError {
public:
    using DataError::DataError;
};

class InvalidLabel : public DataError {
public:
    using DataError::DataError;
};

class ShapeMismatch : public DataError {
public:
    using DataError::DataError;
};

class DegenerateLabels : public DataError {
public:
    using DataError::DataError;
};

class DegenerateSplit : public DataError {
public:
    using DataError::DataError;
};

class ParseError : public DataError {
public:
    ParseError(const std::string& source, std::size_t line, const std::string& what)
        : DataError(source + ":" + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// Bank or grid file that fails magic/size checks.
class FormatError : public DataError {
public:
    using DataError::DataError;
};

}  // namespace vsaogm
