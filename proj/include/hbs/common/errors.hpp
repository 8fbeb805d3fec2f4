#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace hbs {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input. `kind()` is a short stable tag ("knot vector",
/// "hierarchy nesting", "fixture", ...) used by the harness when reporting;
/// `where()` locates the offending item (field path, line, level).
class ValidationError : public Error {
 public:
  ValidationError(std::string kind, const std::string& message, std::string where = {})
      : Error(kind + ": " + message + (where.empty() ? "" : " [at " + where + "]")),
        kind_(std::move(kind)),
        message_(message),
        where_(std::move(where)) {}

  const std::string& kind() const noexcept { return kind_; }
  const std::string& message() const noexcept { return message_; }
  const std::string& where() const noexcept { return where_; }

 private:
  std::string kind_;
  std::string message_;
  std::string where_;
};

/// Explicit level knot vectors that are not successive refinements.
class NestingViolation : public ValidationError {
 public:
  NestingViolation(int level, int direction, const std::string& message)
      : ValidationError("level nesting", message,
                        "level " + std::to_string(level) + ", direction " + std::to_string(direction)),
        level_(level),
        direction_(direction) {}

  int level() const noexcept { return level_; }
  int direction() const noexcept { return direction_; }

 private:
  int level_;
  int direction_;
};

/// A fine knot vector does not refine the knots of a coarse B-spline.
class RefinementMismatch : public Error {
 public:
  using Error::Error;
};

/// The multiscale operator was asked to run on a hierarchy whose omega
/// domains are not nested.
class AdmissibilityError : public Error {
 public:
  using Error::Error;
};

/// A user callback produced a non-finite value.
class EvaluationError : public Error {
 public:
  EvaluationError(const std::string& message, std::vector<double> location)
      : Error(message + " at " + format(location)), location_(std::move(location)) {}

  const std::vector<double>& location() const noexcept { return location_; }

 private:
  static std::string format(const std::vector<double>& x) {
    std::string s = "(";
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (i) s += ", ";
      s += std::to_string(x[i]);
    }
    return s + ")";
  }

  std::vector<double> location_;
};

/// A property guaranteed by construction did not hold.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace hbs
