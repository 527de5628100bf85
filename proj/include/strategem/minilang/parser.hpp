#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "strategem/minilang/ast.hpp"

namespace strategem::minilang {

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(std::size_t line, std::size_t column, const std::string& message);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

// A second expression focus, or a second type focus, in one module.
class MultipleFociError : public SyntaxError {
 public:
  using SyntaxError::SyntaxError;
};

// A declaration starts at column 1; indented lines continue the previous
// declaration. `--` starts a comment that runs to the end of the line.
Module parse(std::string_view source);

// Parsers for fragments, mostly for tests and the Python module.
Expr parse_expr(std::string_view source);
Type parse_type(std::string_view source);

}  // namespace strategem::minilang
