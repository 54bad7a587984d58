#pragma once

#include <stdexcept>
#include <string>

namespace tw {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Operands of incompatible shape (ambient ranks, module dimensions, ranks of A).
struct DimensionError : Error {
  using Error::Error;
};

// Input outside an operation's domain: window too small, rank deficit, bad splitting.
struct PreconditionError : Error {
  using Error::Error;
};

// A mathematical identity or certificate failed on the given data.
struct CheckFailure : Error {
  using Error::Error;
};

// Malformed external input (JSON structure, unknown tags).
struct InputError : Error {
  using Error::Error;
};

}  // namespace tw
