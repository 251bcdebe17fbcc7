#pragma once

#include <stdexcept>
#include <string>

namespace osfib {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An instance description violates its invariants (empty means, means
// outside [0,1], inconsistent parameters).
struct InvalidInstanceError : Error {
    using Error::Error;
};

// An arm index is outside [1, K].
struct InvalidArmError : Error {
    using Error::Error;
};

// A feedback slice does not cover every arm the policy needs.
struct FeedbackContractError : Error {
    using Error::Error;
};

// A gap of zero appears where a formula divides by it.
struct DegenerateGapError : Error {
    using Error::Error;
};

// The exact oracle was asked for an instance outside its enumeration guard.
struct OracleTooLargeError : Error {
    using Error::Error;
};

// A bid lies outside [0,1].
struct InvalidBidError : Error {
    using Error::Error;
};

} // namespace osfib
