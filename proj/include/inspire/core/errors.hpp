#pragma once

#include <stdexcept>
#include <string>

namespace inspire {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad input data or violated preconditions.
class ValidationError : public Error {
public:
    using Error::Error;
};

class IncompleteScorecardError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class ScoreRangeError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// A ratio score whose denominator is zero: undefined, never 0.0.
class UndefinedScoreError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    ConfigError(const std::string& key_path, const std::string& what)
        : Error(key_path + ": " + what), key_path_(key_path) {}
    const std::string& key_path() const { return key_path_; }

private:
    std::string key_path_;
};

class BuildError : public Error {
public:
    using Error::Error;
};

}  // namespace inspire
