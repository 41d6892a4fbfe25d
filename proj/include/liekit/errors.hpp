#ifndef LIEKIT_ERRORS_HPP
#define LIEKIT_ERRORS_HPP

#include <array>
#include <stdexcept>
#include <string>

namespace liekit {

// Base class for every error the library throws on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonSquareError : Error {
  using Error::Error;
};

struct DimensionMismatchError : Error {
  using Error::Error;
};

struct AmbientMismatchError : Error {
  using Error::Error;
};

struct ZeroPolynomialError : Error {
  using Error::Error;
};

// Antisymmetry or Jacobi failure; carries the first violating index tuple.
struct AxiomViolationError : Error {
  std::array<std::size_t, 4> indices;
  bool antisymmetry;  // true: antisymmetry violated at (i,j,k); false: Jacobi at (i,j,k,l)

  AxiomViolationError(const std::string& msg, std::array<std::size_t, 4> idx, bool antisym)
      : Error(msg), indices(idx), antisymmetry(antisym) {}
};

struct IrrationalSpectrumError : Error {
  using Error::Error;
};

struct NotCommutingError : Error {
  using Error::Error;
};

struct NotSolvableError : Error {
  using Error::Error;
};

struct NotADerivationError : Error {
  using Error::Error;
};

struct InvalidParamsError : Error {
  using Error::Error;
};

struct NotBracketClosedError : Error {
  using Error::Error;
};

// Raised when the center-quotient descent identity fails; indicates a bug,
// the construction guarantees it holds.
struct DescentFailureError : Error {
  using Error::Error;
};

struct VerificationFailureError : Error {
  using Error::Error;
};

struct InternalInconsistencyError : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace liekit

#endif
