#pragma once

#include <stdexcept>

namespace homrel {

// Raised when an internal consistency re-check fails, usually meaning the
// caller's assumptions (e.g. "this order is a factoring permutation", "this
// relation is good") do not hold for the given input.
struct DefensiveCheckError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed or out-of-range external input (files, CLI payloads).
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace homrel
