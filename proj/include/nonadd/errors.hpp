#pragma once

#include <stdexcept>
#include <string>

namespace nonadd {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact rational arithmetic left the int64 range.
struct RationalOverflow : Error {
    using Error::Error;
};

// Operands live on different ground sets.
struct GroundMismatch : Error {
    using Error::Error;
};

// No derivation rule exists for this measure family combination.
struct UnsupportedFamily : Error {
    using Error::Error;
};

// Operation is only defined on finite grounds.
struct UnsupportedGround : Error {
    using Error::Error;
};

// Tail structures of two partitions do not compose.
struct UnsupportedPair : Error {
    using Error::Error;
};

struct LimitExceeded : Error {
    using Error::Error;
};

// A split strategy applies to no block of the partition.
struct NotApplicable : Error {
    using Error::Error;
};

struct NotIntegrable : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

}  // namespace nonadd
