#pragma once

// Error categories shared across the library. The CLI maps them to exit
// codes: parameter_error -> 2, budget_error -> 3, consistency_error -> 4,
// std::overflow_error -> 2.

#include <stdexcept>
#include <string>

namespace blockade {

// bad argument values or malformed input
struct parameter_error : std::invalid_argument {
    explicit parameter_error(const std::string& msg) : std::invalid_argument(msg) {}
};

// the computation would exceed a configured size/time budget
struct budget_error : std::runtime_error {
    explicit budget_error(const std::string& msg) : std::runtime_error(msg) {}
};

// an internal cross-check failed; indicates a library bug, never user error
struct consistency_error : std::logic_error {
    explicit consistency_error(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace blockade
