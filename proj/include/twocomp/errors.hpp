#ifndef TWOCOMP_ERRORS_HPP
#define TWOCOMP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace twocomp {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invalid grid or solver configuration (bad sizes, out-of-range knobs, bad config text).
struct ConfigError : Error {
    using Error::Error;
};

/// API misuse, e.g. mixing fields from different grids.
struct UsageError : Error {
    using Error::Error;
};

/// Exact-solution parameters violating the family constraints.
struct InvalidParameterError : Error {
    using Error::Error;
};

/// Requested evaluation outside the valid domain (periodic seam too close, etc).
struct DomainError : Error {
    using Error::Error;
};

/// Non-finite values or a failed numerical search.
struct NumericError : Error {
    using Error::Error;
};

/// A theorem hypothesis required by the requested computation does not hold.
struct HypothesisError : Error {
    using Error::Error;
};

} // namespace twocomp

#endif
