#pragma once

#include <stdexcept>
#include <string>

namespace matvar {

/// Malformed or rejected input (bad JSON, loops, parallel edges, field mismatch).
struct input_error : std::runtime_error {
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A documented precondition was violated (e.g. n <= r(1), degree mismatch).
struct precondition_error : std::runtime_error {
    explicit precondition_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A configurable resource bound was exceeded (minor search, coloring enumeration).
struct resource_error : std::runtime_error {
    explicit resource_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace matvar
