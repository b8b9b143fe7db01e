#pragma once

#include <stdexcept>
#include <string>

namespace trigspline {

/// Violated input contract (bad grid size, out-of-range index, malformed
/// document, ...). Maps to CLI exit code 2.
class precondition_error : public std::invalid_argument {
public:
    explicit precondition_error(const std::string& msg)
        : std::invalid_argument(msg) {}
};

/// Numerical failure discovered while computing (singular per-harmonic
/// system, residual over threshold, rank deficiency). Maps to CLI exit
/// code 3.
class numerical_error : public std::runtime_error {
public:
    explicit numerical_error(const std::string& msg)
        : std::runtime_error(msg) {}
};

}  // namespace trigspline
