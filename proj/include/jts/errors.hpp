#pragma once

#include <stdexcept>
#include <string>

namespace jts {

// Base for everything thrown by the library. Messages are prefixed with
// "module.operation:" so CLI diagnostics can name the failing surface.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad input: schema violations, rank mismatches, non-generating sets. Exit code 2.
struct ValidationError : Error {
  using Error::Error;
};

// Numerical or resource guard tripped: enumeration caps, missing brackets,
// non-convergent solves. Exit code 3.
struct GuardError : Error {
  using Error::Error;
};

}  // namespace jts
