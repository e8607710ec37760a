#pragma once

#include <stdexcept>
#include <string>

namespace biclique {

// Base of every error thrown by the library. The CLI maps these to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad indices, wrong degree, non-monic, unparsable files.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// A (3,k) parameter tuple with k = 0.
class DegenerateParameters : public Error {
 public:
  using Error::Error;
};

// A reflection-family constraint that forces a negative count.
class InfeasibleFamily : public Error {
 public:
  using Error::Error;
};

// A matching sequence that is not realizable inside K_{j,k}.
class InconsistentInput : public Error {
 public:
  using Error::Error;
};

// A brute-force oracle was asked to run beyond its size guard.
class SizeGuardExceeded : public Error {
 public:
  using Error::Error;
};

// The case-formula parameters failed the exact identity check. Never expected.
class FormulaIntegrityError : public Error {
 public:
  using Error::Error;
};

}  // namespace biclique
