#pragma once

#include <stdexcept>
#include <string>

namespace leibniz {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct AmbientMismatch : Error {
  using Error::Error;
};

struct NotAnIdeal : Error {
  explicit NotAnIdeal(const std::string& what, long index = -1)
      : Error(what), term_index(index) {}
  long term_index;  // chain position when raised by chain validation, else -1
};

struct NotASubalgebra : Error {
  using Error::Error;
};

struct NotAscending : Error {
  explicit NotAscending(const std::string& what, long index)
      : Error(what), term_index(index) {}
  long term_index;
};

struct NotSplitExtension : Error {
  using Error::Error;
};

struct NotCentralDerivation : Error {
  using Error::Error;
};

struct LeibnizViolation : Error {
  using Error::Error;
};

struct HomomorphismCheckFailed : Error {
  using Error::Error;
};

struct BadDimension : Error {
  using Error::Error;
};

}  // namespace leibniz
