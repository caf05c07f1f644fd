#pragma once

#include <stdexcept>
#include <string>

namespace ceres {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct OverflowError : Error {
  explicit OverflowError(const std::string& msg) : Error(msg) {}
};

// Raised by checkProof / checkDeduction with a per-node diagnostic.
struct CheckError : Error {
  explicit CheckError(const std::string& msg) : Error(msg) {}
};

// Raised by evaluation (undefined symbol, free variable, ...).
struct EvalError : Error {
  explicit EvalError(const std::string& msg) : Error(msg) {}
};

struct ParseError : Error {
  int line, col;
  ParseError(const std::string& msg, int line_, int col_)
      : Error(msg + " at " + std::to_string(line_) + ":" + std::to_string(col_)),
        line(line_), col(col_) {}
};

} // namespace ceres
