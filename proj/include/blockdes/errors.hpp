#ifndef BLOCKDES_ERRORS_HPP_
#define BLOCKDES_ERRORS_HPP_

#include <stdexcept>

namespace blockdes {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input fails a documented precondition (bad v/k, malformed block, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// A factorization pivot fell below tolerance; the matrix is treated as
// rank deficient.
class SingularMatrix : public Error {
 public:
  using Error::Error;
};

// The design/measure does not connect all treatments, so the consecutive
// contrasts are not estimable.
class Inestimable : public Error {
 public:
  using Error::Error;
};

class MaxItersExceeded : public Error {
 public:
  using Error::Error;
};

// Rounding a measure produced no blocks at all.
class EmptyDesign : public Error {
 public:
  using Error::Error;
};

class NotNested : public Error {
 public:
  using Error::Error;
};

class NoDeletableBlock : public Error {
 public:
  using Error::Error;
};

// A measure/design file failed schema or consistency validation.
class FileFormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace blockdes

#endif  // BLOCKDES_ERRORS_HPP_
