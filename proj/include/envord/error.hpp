#pragma once

#include <stdexcept>
#include <string>

namespace envord {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands drawn from different coefficient rings.
class RingMismatch : public Error {
 public:
  using Error::Error;
};

// Elements built over different algebras or splits.
class CarrierMismatch : public Error {
 public:
  using Error::Error;
};

// A value that cannot be represented in the requested ring, e.g. 1/2 in Z.
class DomainError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& what)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

// The recursive normal form disagreed with the straightening oracle. This can
// only be an implementation defect.
class OracleMismatch : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace envord
