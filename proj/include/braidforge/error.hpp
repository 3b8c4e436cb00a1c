#pragma once

#include <stdexcept>
#include <string>

namespace braidforge {

// Domain errors: malformed input, a move applied where it does not fit,
// a precondition on the braid that does not hold.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configured resource cap was exceeded. The computation was abandoned,
// no partial answer is returned.
class ResourceCapError : public Error {
 public:
  using Error::Error;
};

// Broken internal invariant (for instance a non-plane embedding).
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace braidforge
