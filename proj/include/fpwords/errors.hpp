#pragma once

#include <stdexcept>

namespace fpwords {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid input or a violated operation precondition. The CLI maps this to
// exit status 2.
struct InputError : Error {
  using Error::Error;
};

// An in-scope word matched no classification branch. This cannot happen
// unless the implementation (or the mathematics) is wrong; the verification
// harness records it as data instead of crashing. The CLI maps it to exit
// status 1.
struct TheoremViolation : Error {
  using Error::Error;
};

}  // namespace fpwords
