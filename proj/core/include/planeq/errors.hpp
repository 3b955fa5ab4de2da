#pragma once

#include <stdexcept>

namespace planeq {

/// Raised when a computed quantity breaks a numerical invariant at run time
/// (as opposed to std::invalid_argument for malformed inputs).
struct validation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace planeq
