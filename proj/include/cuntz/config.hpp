#pragma once

#include <cstddef>

namespace cuntz {

// Default coefficient tolerance used throughout.  May be overridden per call;
// the CLI also honors the CUNTZ_ENDO_EPS environment variable.
inline constexpr double kDefaultEps = 1e-9;

// Resource caps.  Products of towers grow exponentially in the worst case,
// so every term-producing operation checks these.
struct Limits {
    int max_level = 12;               // largest k for dense n^k x n^k matrices
    std::size_t max_terms = 1000000;  // cap on terms per element
    double zero_eps = 1e-9;           // coefficients at or below this are dropped
};

Limits& limits();

} // namespace cuntz
