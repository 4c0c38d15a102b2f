#pragma once

#include <stdexcept>
#include <string>

namespace horo {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the input domain failed (point not interior, not in D+, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The Cauchy kernel was evaluated at (or numerically at) its polar set.
class SingularityError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A fiber integral does not decay fast enough to be trusted.
class DivergenceError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// The requested quantity needs data the root datum does not carry (e.g. Sigma+).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// Malformed input text. `line` is 1-based, 0 when no line applies; empty `file` for
/// text that did not come from a file (command-line values).
class ParseError : public Error {
 public:
  ParseError(std::string file, int line, const std::string& what)
      : Error(format(file, line, what)), file_(std::move(file)), line_(line) {}

  const std::string& file() const noexcept { return file_; }
  int line() const noexcept { return line_; }

 private:
  static std::string format(const std::string& file, int line, const std::string& what) {
    if (file.empty()) return line > 0 ? "line " + std::to_string(line) + ": " + what : what;
    std::string out = file;
    if (line > 0) out += ":" + std::to_string(line);
    return out + ": " + what;
  }

  std::string file_;
  int line_;
};

/// A root datum parsed but violates one of its structural invariants.
class ValidationError : public Error {
 public:
  ValidationError(std::string invariant, const std::string& detail)
      : Error("invariant '" + invariant + "' violated: " + detail),
        invariant_(std::move(invariant)) {}

  const std::string& invariant() const noexcept { return invariant_; }

 private:
  std::string invariant_;
};

}  // namespace horo
