#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace fvo {

// Base class for everything thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input data (FCIDUMP, sidecar, config text).
struct ParseError : Error {
    explicit ParseError(const std::string& msg, long line = -1)
        : Error(line >= 0 ? "parse error at line " + std::to_string(line) + ": " + msg
                          : "parse error: " + msg),
          line_number(line) {}
    long line_number;
};

// Caller violated a precondition (bad indices, inconsistent counts, ...).
struct UsageError : Error {
    using Error::Error;
};

// Problem exceeds a configured resource cap (spin orbitals, qubits).
struct ResourceError : Error {
    using Error::Error;
};

// A correlation kernel failed (degenerate denominator, inner failure).
struct SolverError : Error {
    using Error::Error;
};

// Iterative optimization ran out of iterations; carries the best energy seen.
struct ConvergenceError : Error {
    ConvergenceError(const std::string& msg, double best)
        : Error(msg), best_energy(best) {}
    double best_energy;
};

// The library caught itself producing inconsistent intermediate data.
struct InternalError : Error {
    using Error::Error;
};

// File system failure (missing input, unwritable output).
struct IoError : Error {
    using Error::Error;
};

// Config validation; aggregates every violation, not just the first.
struct ValidationError : Error {
    explicit ValidationError(std::vector<std::string> issues)
        : Error(join(issues)), violations(std::move(issues)) {}
    std::vector<std::string> violations;

  private:
    static std::string join(const std::vector<std::string>& v) {
        std::string out = "config validation failed:";
        for (const auto& s : v) out += "\n  - " + s;
        return out;
    }
};

}  // namespace fvo
