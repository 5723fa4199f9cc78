#pragma once

#include <stdexcept>
#include <string>

namespace parhitchin {

// Base class for all library errors so callers can catch one type.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Inverting a series of positive valuation.
struct NotAUnit : Error {
    using Error::Error;
};

// A valuation or pivot cannot be certified at the available precision.
struct PrecisionTooLow : Error {
    using Error::Error;
};

// Bezout solve failed: the two factors share content at this precision.
struct NotCoprime : Error {
    using Error::Error;
};

// Hensel iteration cannot make progress at the available precision.
struct NoConvergence : Error {
    using Error::Error;
};

// Input left the generic locus (repeated edge roots, colliding constant
// terms mod t^2, ...).
struct GenericityViolation : Error {
    using Error::Error;
};

// A kernel or block has unexpected rank.
struct RankMismatch : Error {
    using Error::Error;
};

struct NotNilpotent : Error {
    using Error::Error;
};

struct DegreeMismatch : Error {
    using Error::Error;
};

// Edge roots live in a field extension beyond the configured cap.
struct ExtensionCapExceeded : Error {
    using Error::Error;
};

// Exact integer result does not fit the requested machine type.
struct OverflowError : Error {
    using Error::Error;
};

}  // namespace parhitchin
