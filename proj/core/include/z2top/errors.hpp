#pragma once

#include <stdexcept>
#include <string>

namespace z2top {

/// Base class for all errors raised by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input: bad labels, broken filtrations,
/// unparseable documents, unknown generator names.
class input_error : public error {
 public:
  using error::error;
};

/// Parse failure with a position, for file ingestion diagnostics.
class parse_error : public input_error {
 public:
  parse_error(const std::string& origin, int line, const std::string& what)
      : input_error(origin + ":" + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Violated mathematical precondition or failed identity: non-cycles,
/// non-boundaries, classes outside ker Sq^2, contraction violations.
class math_error : public error {
 public:
  using error::error;
};

}  // namespace z2top
