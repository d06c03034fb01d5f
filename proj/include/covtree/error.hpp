#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace covtree {

/// Invalid argument, malformed input file, or inconsistent configuration.
struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A guarded computation exceeded its configured resource cap.
struct ResourceCapError : std::runtime_error {
    ResourceCapError(const std::string& what, std::size_t cap_value)
        : std::runtime_error(what), cap(cap_value) {}

    std::size_t cap;
};

/// A numeric evaluation failed to converge or left the finite range.
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace covtree
