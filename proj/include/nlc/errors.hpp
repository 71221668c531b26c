#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nlc {

// Base of every error raised by the library. The CLI maps these to exit
// status 2 (input error).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : Error(message + " at offset " + std::to_string(offset)),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Decimal or otherwise non-fraction numeric literal ("0.5", "1e3").
class NonRationalLiteral : public ParseError {
 public:
  using ParseError::ParseError;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class ZeroPolynomial : public Error {
 public:
  ZeroPolynomial() : Error("zero polynomial has no finite order") {}
};

class NotSquarefree : public Error {
 public:
  using Error::Error;
};

class CommonFactor : public Error {
 public:
  using Error::Error;
};

// A blow-up center (or a non-SNC point) has irrational coordinates.
class NonRationalCenter : public Error {
 public:
  using Error::Error;
};

class DegreeOverflow : public Error {
 public:
  using Error::Error;
};

class CommonComponent : public Error {
 public:
  using Error::Error;
};

class NonRationalPoint : public Error {
 public:
  using Error::Error;
};

}  // namespace nlc
