#pragma once

#include <stdexcept>
#include <string>

namespace rebal {

/// Invalid (K, r, T) or an index outside its range.
struct ParamError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Parameters are valid in general but the requested rebalancing is not
/// defined for them (node removal with r = 2).
struct UnsupportedConfiguration : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A sender broadcast data it does not hold.
struct ProtocolViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An addressed receiver lacks the side information to cancel the other
/// operands of a coded broadcast.
struct DecodeFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A holder of a target segment is missing one of its parts at merge time.
struct MergeFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace rebal
