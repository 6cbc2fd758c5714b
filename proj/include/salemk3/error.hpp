#pragma once

#include <stdexcept>
#include <string>

namespace salemk3 {

// Bad user-supplied data: malformed polynomial text, a non-Salem trace where
// one is required, a pole, a parity mismatch.  CLI maps this to exit code 2.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// Exhausted refinement budget, ambiguous factor selection, broken internal
// invariant.  CLI maps this to exit code 3.
struct InternalError : std::runtime_error {
    explicit InternalError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace salemk3
