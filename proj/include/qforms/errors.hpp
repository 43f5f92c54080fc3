#pragma once

#include <stdexcept>
#include <string>

namespace qf {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Fractional exponent offsets that cannot be aligned.
struct OffsetMismatch : Error {
  using Error::Error;
};

struct DivisionError : Error {
  using Error::Error;
};

struct DomainError : Error {
  using Error::Error;
};

// Form, pair, triple or quadruple outside the supported catalogue.
struct UnsupportedForm : Error {
  using Error::Error;
};

struct DegenerateBasis : Error {
  using Error::Error;
};

}  // namespace qf
