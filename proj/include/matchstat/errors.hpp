#pragma once

#include <stdexcept>
#include <string>

namespace matchstat {

// Malformed input: bad pairs, bad shape sequences, unparseable text.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input outside the domain of an operation (even double factorial,
// non-corner box, non-positive s, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Floating-point overflow that cannot be represented in the result.
class RangeError : public std::range_error {
 public:
  using std::range_error::range_error;
};

// A size parameter exceeds what an exact or exhaustive pipeline will handle.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::string parameter, long long value, long long limit)
      : std::runtime_error(parameter + "=" + std::to_string(value) +
                           " exceeds budget " + std::to_string(limit)),
        parameter_(std::move(parameter)) {}

  const std::string& parameter() const noexcept { return parameter_; }

 private:
  std::string parameter_;
};

}  // namespace matchstat
