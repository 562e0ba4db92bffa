#pragma once

#include <stdexcept>
#include <string>

namespace catacode {

// Base for everything thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid parameters or inputs violating a documented precondition.
struct ParamError : Error {
  using Error::Error;
};

// Malformed on-disk artifact (tape file, program file, script).
struct FormatError : Error {
  using Error::Error;
};

// Decoder promise violated: the word is not within e symbol errors of a
// codeword, or correction failed its own re-check.
struct UncorrectableError : Error {
  using Error::Error;
};

// Singular linear system; the BCH decoder uses this as a control signal.
struct SingularSystemError : Error {
  using Error::Error;
};

// A simulation contract (tape restoration, reversibility, budget) failed.
struct ContractError : Error {
  using Error::Error;
};

// Machine entered a configuration with no transition.
struct StuckMachineError : Error {
  using Error::Error;
};

// Step budget exhausted before the machine halted.
struct StepCapError : Error {
  using Error::Error;
};

}  // namespace catacode
