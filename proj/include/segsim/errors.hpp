#pragma once

#include <stdexcept>
#include <string>

namespace segsim {

// File access problems (missing file, unreadable stream). CLI exit code 2.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Schema violations, malformed input, broken preconditions. CLI exit code 3.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Eigensolver failed to converge; carries the best residual reached.
class SolverError : public std::runtime_error {
public:
    SolverError(const std::string& msg, double best_residual)
        : std::runtime_error(msg), best_residual_(best_residual) {}
    double best_residual() const { return best_residual_; }

private:
    double best_residual_;
};

} // namespace segsim
