#pragma once

#include <stdexcept>
#include <string>

namespace difface {

// Invalid parameters or malformed configuration. The CLI maps these to exit code 2.
class ParamError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ShapeError : public ParamError {
public:
    using ParamError::ParamError;
};

class ConfigError : public ParamError {
public:
    using ParamError::ParamError;
};

// Missing, unreadable or inconsistent data. Exit code 3.
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Content hash mismatch on load.
class IntegrityError : public DataError {
public:
    using DataError::DataError;
};

// Non-finite values encountered during computation. Exit code 4.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace difface
