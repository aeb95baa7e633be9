#pragma once

#include <stdexcept>
#include <string>

namespace cireg {

// Malformed input, violated data invariants, impossible requests.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

// Relative-risk function evaluated outside its domain.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& msg) : std::domain_error(msg) {}
};

// Optimizer could not make progress (singular information, failed ascent).
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& msg) : std::runtime_error(msg) {}
};

class SingularError : public ConvergenceError {
 public:
  SingularError(const std::string& msg, double condition)
      : ConvergenceError(msg), condition_estimate(condition) {}
  double condition_estimate;
};

}  // namespace cireg
