#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ellsurf {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A hypothesis of an operation does not hold for the given input.
/// `hypothesis()` names the violated condition, e.g. "2*x0^3 - y0^2 != 0".
class PreconditionError : public Error {
 public:
  PreconditionError(std::string hypothesis, const std::string& detail)
      : Error(detail.empty() ? "precondition violated: " + hypothesis
                             : "precondition violated: " + hypothesis + " (" + detail + ")"),
        hypothesis_(std::move(hypothesis)) {}
  explicit PreconditionError(std::string hypothesis) : PreconditionError(std::move(hypothesis), "") {}

  const std::string& hypothesis() const noexcept { return hypothesis_; }

 private:
  std::string hypothesis_;
};

/// Group-law operation requested on a curve with 4A^3 + 27B^2 = 0.
class SingularCurveError : public PreconditionError {
 public:
  SingularCurveError() : PreconditionError("4A^3 + 27B^2 != 0") {}
  explicit SingularCurveError(const std::string& detail) : PreconditionError("4A^3 + 27B^2 != 0", detail) {}
};

/// A search or certification gave up after its configured budget.
/// This never proves the negative.
class BudgetExhausted : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace ellsurf
