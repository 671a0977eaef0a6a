#pragma once

#include <stdexcept>
#include <string>

namespace mvpoly {

// Invalid mathematical input: non-reduced words where reduced ones are
// required, BZ validation failures, unsupported Cartan types, singular
// matrices.  The CLI maps this to exit code 3.
struct math_error : std::runtime_error {
    explicit math_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed files, options or JSON shapes.  CLI exit code 2.
struct schema_error : std::runtime_error {
    explicit schema_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A state the underlying theorems rule out (non-unique braid solution,
// inconsistent propagation, failed re-validation after a crystal shift).
// Reaching one of these is a bug, not bad input.
struct invariant_error : std::logic_error {
    explicit invariant_error(const std::string& msg) : std::logic_error(msg) {}
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw math_error(msg);
}

inline void check_invariant(bool cond, const std::string& msg) {
    if (!cond) throw invariant_error(msg);
}

} // namespace mvpoly
