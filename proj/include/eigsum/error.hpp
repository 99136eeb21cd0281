#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace eigsum {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid arguments or preconditions (bad n, k out of range, malformed pair set, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Rejected input data, carrying the 0-based index of the offending item
/// (edge index for edge lists, line number for files).
class InputError : public Error {
public:
    InputError(const std::string& what, std::size_t index)
        : Error(what + " (at index " + std::to_string(index) + ")"), index_(index) {}

    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

/// The eigensolver stopped before reaching its tolerance.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, double residual)
        : Error(what + " (residual " + std::to_string(residual) + ")"), residual_(residual) {}

    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

/// Two routes to the same quantity disagreed beyond tolerance.
class InconsistencyError : public Error {
public:
    using Error::Error;
};

}  // namespace eigsum
