#pragma once

#include <stdexcept>
#include <string>

namespace iontrap {

// Error taxonomy. Three families so the CLI can map them to exit codes:
// config errors (bad input files), model errors (physics preconditions),
// and fit errors (non-convergence).

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : ConfigError {
    ParseError(const std::string& msg, int line)
        : ConfigError("parse error at line " + std::to_string(line) + ": " + msg),
          line_number(line) {}
    int line_number;
};

struct UnknownKey : ConfigError {
    explicit UnknownKey(const std::string& key)
        : ConfigError("unknown config key: " + key) {}
};

struct MissingSection : ConfigError {
    explicit MissingSection(const std::string& what)
        : ConfigError("missing config section or field: " + what) {}
};

struct SchemaMismatch : ConfigError {
    using ConfigError::ConfigError;
};

struct ModelError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnstableTrap : ModelError {
    using ModelError::ModelError;
};

struct NoSolution : ModelError {
    using ModelError::ModelError;
};

struct InvalidGrid : ModelError {
    using ModelError::ModelError;
};

struct UnknownTransition : ModelError {
    using ModelError::ModelError;
};

struct DegenerateSteadyState : ModelError {
    using ModelError::ModelError;
};

struct IndistinguishableStates : ModelError {
    using ModelError::ModelError;
};

struct TruncationTooSmall : ModelError {
    using ModelError::ModelError;
};

struct ExpansionInvalid : ModelError {
    using ModelError::ModelError;
};

struct FitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotConverged : FitError {
    using FitError::FitError;
};

struct ModelEvaluationError : FitError {
    using FitError::FitError;
};

}  // namespace iontrap
