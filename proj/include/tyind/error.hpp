#pragma once

#include <stdexcept>
#include <string>

namespace tyind {

// Error taxonomy mirrored by the C API status codes and the CLI exit codes.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input: group spec strings, bicharacter JSON, CLI ranges.
struct ParseError : Error {
  using Error::Error;
};

// A precondition of an operation does not hold (division by zero, group
// mismatch, non-symmetric bicharacter, |A| not a perfect square, ...).
struct DomainError : Error {
  using Error::Error;
};

// A configured work bound would be exceeded (tuple-sum terms, automorphism
// scans on large groups).
struct BoundError : Error {
  using Error::Error;
};

// A verification suite found a counterexample.
struct VerifyError : Error {
  using Error::Error;
};

// An identity that is a theorem failed to hold exactly. Always a build bug,
// never a data error.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace tyind
