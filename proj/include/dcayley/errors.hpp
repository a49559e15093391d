#pragma once

#include <stdexcept>
#include <string>

namespace dcayley {

// Base for every error raised by the library. The CLI maps the concrete
// subclasses onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An element whose residues do not fit the group, or unparsable element text.
class InvalidElement : public Error {
 public:
  using Error::Error;
};

// A generating set that is not inverse-closed, contains the identity, etc.
class InvalidGeneratingSet : public Error {
 public:
  using Error::Error;
};

// Precondition on a numeric argument violated (d < 6, n < 2, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class NotPrime : public DomainError {
 public:
  using DomainError::DomainError;
};

class UnsupportedPrime : public DomainError {
 public:
  using DomainError::DomainError;
};

// A size cap (enumeration, discrete-log table, search order) was exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// The request cannot be satisfied, e.g. not enough involutions to pad with.
class Infeasible : public Error {
 public:
  using Error::Error;
};

}  // namespace dcayley
