#pragma once

#include <stdexcept>
#include <string>

namespace peik {

// Invalid arguments or configuration (CLI exit code 1).
class ParameterError : public std::invalid_argument {
public:
    explicit ParameterError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Bad input data: degenerate scales, malformed files, mismatched sizes (exit code 2).
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

// Solver-level failures: no upwind data, unreachable nodes, infeasible fits (exit code 3).
class SolverError : public std::runtime_error {
public:
    explicit SolverError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace peik
