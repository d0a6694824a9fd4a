#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hat {

// Base for everything thrown by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Bad user input: malformed permutation, degree mismatch, point out of range.
struct InvalidInputError : Error {
    using Error::Error;
};

// An explicit element set (or enumeration) would exceed its admitted size.
struct OverCapError : Error {
    std::uint64_t size;
    std::uint64_t cap;
    OverCapError(std::uint64_t size_, std::uint64_t cap_)
        : Error("element enumeration exceeds cap: " + std::to_string(size_) +
                " > " + std::to_string(cap_)),
          size(size_), cap(cap_) {}
};

// Coset enumeration did not close within the coset budget.
struct ExceededError : Error {
    std::uint64_t max_cosets;
    explicit ExceededError(std::uint64_t max_cosets_)
        : Error("coset enumeration exceeded budget of " + std::to_string(max_cosets_) + " cosets"),
          max_cosets(max_cosets_) {}
};

// A computation budget (vertex count, backtrack size) was exceeded.
struct BudgetError : Error {
    using Error::Error;
};

// A computed check contradicts a statement that is guaranteed to hold.
// The CLI maps this to a distinct exit code so a falsified claim is
// machine-distinguishable from a usage error.
struct FalsificationError : Error {
    using Error::Error;
};

// Internal consistency failure (would indicate an implementation bug).
struct InternalError : Error {
    using Error::Error;
};

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    if (b != 0 && a > UINT64_MAX / b)
        throw Error("group order overflows 64 bits");
    return a * b;
}

}  // namespace hat
