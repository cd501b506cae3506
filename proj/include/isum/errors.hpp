#pragma once

#include <limits>
#include <stdexcept>
#include <string>

namespace isum {

// Argument outside the domain of a function (pole, negative index, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A method declined to produce a certified answer. Carries the best
// estimate reached so callers can still report it.
class RefusedError : public std::runtime_error {
 public:
  explicit RefusedError(const std::string& what,
                        double best = std::numeric_limits<double>::quiet_NaN(),
                        double err = std::numeric_limits<double>::infinity())
      : std::runtime_error(what), best_(best), err_(err) {}
  double best_estimate() const noexcept { return best_; }
  double error_estimate() const noexcept { return err_; }

 private:
  double best_;
  double err_;
};

class IntegrationError : public RefusedError {
 public:
  using RefusedError::RefusedError;
};

}  // namespace isum
