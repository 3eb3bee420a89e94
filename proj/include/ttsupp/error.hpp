#pragma once

#include <stdexcept>
#include <string>

namespace ttsupp {

// Malformed or out-of-domain input (bad descriptor, unknown point, ...).
// CLI maps this to exit code 1.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// Operation not defined for the given model kind (e.g. Hochster dual of an
// infinite symbolic space). Also exit code 1.
struct unsupported_error : std::runtime_error {
    explicit unsupported_error(const std::string& what) : std::runtime_error(what) {}
};

// A checked law failed. CLI maps this to exit code 2.
struct violation_error : std::runtime_error {
    explicit violation_error(const std::string& what) : std::runtime_error(what) {}
};

// A configured cap was exceeded (factorization bound, poset size,
// enumeration size). CLI maps this to exit code 3.
struct resource_error : std::runtime_error {
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace ttsupp
