#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hyperluk {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t column)
      : Error("column " + std::to_string(column) + ": " + message), column_(column) {}

  // 1-based position in the input text.
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

class OccurrenceError : public Error {
 public:
  using Error::Error;
};

class RuleError : public Error {
 public:
  using Error::Error;
};

class TransformError : public Error {
 public:
  using Error::Error;
};

class SizeGuardError : public Error {
 public:
  using Error::Error;
};

class ModelError : public Error {
 public:
  using Error::Error;
};

}  // namespace hyperluk
