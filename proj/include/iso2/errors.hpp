#pragma once

#include <stdexcept>
#include <string>

namespace iso2 {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotPositiveDefinite : public Error {
 public:
  explicit NotPositiveDefinite(const std::string& what) : Error("not positive definite: " + what) {}
};

class ShapeMismatch : public Error {
 public:
  explicit ShapeMismatch(const std::string& what) : Error("shape mismatch: " + what) {}
};

class OutOfRange : public Error {
 public:
  explicit OutOfRange(const std::string& what) : Error("out of range: " + what) {}
};

class DivisibilityViolated : public Error {
 public:
  explicit DivisibilityViolated(const std::string& what) : Error("divisibility violated: " + what) {}
};

class PreconditionViolated : public Error {
 public:
  explicit PreconditionViolated(const std::string& what) : Error("precondition violated: " + what) {}
};

/// The bounded-precision local engine could not certify either outcome.
class PrecisionExhausted : public Error {
 public:
  explicit PrecisionExhausted(const std::string& what) : Error("precision exhausted: " + what) {}
};

class NoObstructionFound : public Error {
 public:
  explicit NoObstructionFound(const std::string& what) : Error("no obstruction found: " + what) {}
};

/// Local conditions held for a class-number-one M but no global witness was found.
class InconsistentClassNumber : public Error {
 public:
  explicit InconsistentClassNumber(const std::string& what) : Error("inconsistent class number: " + what) {}
};

/// A link of the genus-mate chain could not be completed.
class ChainBroken : public Error {
 public:
  explicit ChainBroken(const std::string& what) : Error("chain broken: " + what) {}
};

class NoBranchApplies : public Error {
 public:
  explicit NoBranchApplies(const std::string& what) : Error("no branch applies: " + what) {}
};

class InvalidInput : public Error {
 public:
  explicit InvalidInput(const std::string& what) : Error("invalid input: " + what) {}
};

}  // namespace iso2
