#pragma once

#include <stdexcept>

namespace adjmatch {

// Thrown when a request would exceed a configured enumeration budget
// (e.g. the composition-space ceiling of the exact pipeline or the
// brute-force card cap). The CLI maps this to exit code 3.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Thrown when an internal identity that must hold by construction fails
// (e.g. a negative coefficient out of inclusion-exclusion). Always a bug.
class InternalInconsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace adjmatch
