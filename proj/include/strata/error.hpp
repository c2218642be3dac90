#pragma once

#include <stdexcept>
#include <string>

namespace strata {

// Base for every failure raised by the library on mathematically meaningful
// input that cannot be processed (as opposed to programming errors).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A division, automorphism quotient or interpolation that should have been
// exact left a remainder.
class InexactError : public Error {
 public:
  using Error::Error;
};

// Two operands live in different ambient rings or have different degrees.
class AmbientMismatch : public Error {
 public:
  using Error::Error;
};

// A request outside the supported domain (p < q, unsupported chain, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace strata
