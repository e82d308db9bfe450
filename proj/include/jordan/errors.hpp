#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace jordan {

// Base for every error the library raises. Subclasses map onto the CLI exit
// codes (parse = 2, unsupported = 3, resource cap = 4).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CapExceeded : public Error {
 public:
  explicit CapExceeded(std::size_t cap)
      : Error("group closure exceeded element cap " + std::to_string(cap)), cap_(cap) {}
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

class KindMismatch : public Error {
 public:
  using Error::Error;
};

class OracleScopeExceeded : public Error {
 public:
  using Error::Error;
};

class AutScopeExceeded : public Error {
 public:
  using Error::Error;
};

class InvalidSpec : public Error {
 public:
  using Error::Error;
};

class NoSuitableNormalSubgroup : public Error {
 public:
  using Error::Error;
};

class ZeroInput : public Error {
 public:
  ZeroInput() : Error("zero is not allowed here") {}
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class AmbientMismatch : public Error {
 public:
  AmbientMismatch() : Error("elements live in different fields") {}
};

class UnsupportedPair : public Error {
 public:
  using Error::Error;
};

class DegreeOutOfRange : public Error {
 public:
  explicit DegreeOutOfRange(int d)
      : Error("del Pezzo degree out of range 1..9: " + std::to_string(d)) {}
};

class UnsupportedField : public Error {
 public:
  using Error::Error;
};

// Parse failure carrying the offending input and a 0-based column.
class ParseError : public Error {
 public:
  ParseError(std::string input, std::size_t column, const std::string& what)
      : Error(what), input_(std::move(input)), column_(column) {}

  const std::string& input() const { return input_; }
  std::size_t column() const { return column_; }

  // Two-line rendering: the input, then a caret under the failing column.
  std::string annotated() const {
    return std::string(what()) + "\n  " + input_ + "\n  " + std::string(column_, ' ') + "^";
  }

 private:
  std::string input_;
  std::size_t column_;
};

}  // namespace jordan
