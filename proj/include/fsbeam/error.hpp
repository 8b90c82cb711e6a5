#pragma once

#include <stdexcept>
#include <string>

namespace fsbeam {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A model, load, boundary condition or argument violates its contract.
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// A configuration document could not be parsed or is incomplete.
class ConfigError : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

/// A numerical step failed: singular system, quadrature tolerance not met,
/// indefinite stiffness matrix.
class SolverFailure : public Error {
public:
    using Error::Error;
};

}  // namespace fsbeam
