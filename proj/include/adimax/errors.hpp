#ifndef ADIMAX_ERRORS_HPP
#define ADIMAX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace adimax {

/// Invalid user input: bad grid sizes, malformed configs, inconsistent
/// material layouts. Maps to CLI exit code 1.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Numerical failure inside a solver (e.g. a vanishing pivot, a root
/// bracket that could not be established). Maps to CLI exit code 2.
class SolverError : public std::runtime_error {
public:
    explicit SolverError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Filesystem failure while emitting results. Maps to CLI exit code 3.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace adimax

#endif
