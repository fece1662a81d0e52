#pragma once

#include <stdexcept>
#include <string>

namespace objectify {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input data breaks a declared invariant (bad state, POVM, scenario field).
struct ValidationError : Error {
  using Error::Error;
};

// An operation was called outside its contract (incompatible instrument,
// vanishing probability, non-Hermitian input, dimension mismatch).
struct PreconditionError : Error {
  using Error::Error;
};

struct DimensionError : PreconditionError {
  using PreconditionError::PreconditionError;
};

}  // namespace objectify
