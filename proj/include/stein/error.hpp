#pragma once

#include <stdexcept>
#include <string>

namespace stein {

/// Raised when inputs violate a mathematical precondition (overlapping
/// grounds, non-partition splits, non-Steinmann input to a derivative...).
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when a request exceeds a configured size bound.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace stein
