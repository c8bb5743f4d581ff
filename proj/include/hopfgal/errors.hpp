#pragma once

#include <stdexcept>
#include <string>

namespace hopfgal {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// A linear map was asked to descend to a quotient it does not respect.
class IllDefined : public Error {
 public:
  using Error::Error;
};

/// The canonical map of a bialgebroid is singular.
class NotLeftHopf : public Error {
 public:
  using Error::Error;
};

class InvalidSubring : public Error {
 public:
  using Error::Error;
};

class InvalidIdealCoideal : public Error {
 public:
  using Error::Error;
};

/// A comparison map left the subspace it is supposed to corestrict to.
class CorestFailure : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class AxiomError : public Error {
 public:
  using Error::Error;
};

/// A structural guarantee proven for the inputs failed to hold on them.
/// Seeing this means either the inputs bypassed validation or there is a bug.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace hopfgal
