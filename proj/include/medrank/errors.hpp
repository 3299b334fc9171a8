#pragma once

#include <stdexcept>
#include <string>

namespace medrank {

// Majority relation is intransitive; no consensus ranking exists.
class CycleError : public std::runtime_error {
 public:
  explicit CycleError(const std::string& what) : std::runtime_error(what) {}
};

// Problem exceeds the configured exact-solver size cap.
class SizeCapError : public std::runtime_error {
 public:
  explicit SizeCapError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed dataset or config input. Carries 1-based row and column when known
// (0 = not applicable).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int row = 0, int column = 0)
      : std::runtime_error(what), row_(row), column_(column) {}

  int row() const { return row_; }
  int column() const { return column_; }

 private:
  int row_;
  int column_;
};

}  // namespace medrank
