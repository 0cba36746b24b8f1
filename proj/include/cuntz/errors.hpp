#pragma once

#include <stdexcept>
#include <string>

namespace cuntz {

// Caller passed structurally invalid arguments (mismatched n, bad letters, ...).
class usage_error : public std::invalid_argument {
public:
    explicit usage_error(const std::string& what) : std::invalid_argument(what) {}
};

// Input is well-formed but outside the domain of the operation
// (non-unitary where a unitary is required, element not in F_n^k, ...).
class value_error : public std::domain_error {
public:
    explicit value_error(const std::string& what) : std::domain_error(what) {}
};

// A configurable resource cap was exceeded (term count, matrix level).
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace cuntz
