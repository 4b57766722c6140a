// Error types shared across the library.

#pragma once

#include <stdexcept>
#include <string>

namespace qpart {

// Arithmetic between series of different truncation orders.
struct OrderMismatchError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A term sum failed to reach exponents beyond the truncation order.
struct DivergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Operation applied outside its domain (reciprocal of a non-unit,
// 2-modular conjugation of a partition with a repeated odd part, ...).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// DSL text rejected; carries source position.
struct ParseError : std::runtime_error {
  int line;
  int column;
  ParseError(int line_, int column_, const std::string& msg)
      : std::runtime_error("parse error at " + std::to_string(line_) + ":" +
                           std::to_string(column_) + ": " + msg),
        line(line_),
        column(column_) {}
};

// DSL expression failed during evaluation; carries the AST path.
struct EvalError : std::runtime_error {
  std::string path;
  EvalError(std::string path_, const std::string& msg)
      : std::runtime_error("evaluation error at " + path_ + ": " + msg),
        path(std::move(path_)) {}
};

}  // namespace qpart
