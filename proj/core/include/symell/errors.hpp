#pragma once

#include <stdexcept>
#include <string>

namespace symell {

/// Arguments outside the domain of the requested integral.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// An asymptotic case was requested outside the conditions its bracket
/// requires (a positive denominator, a "5a < z" assumption, ...).
class RegimeError : public std::runtime_error {
 public:
  explicit RegimeError(const std::string& what) : std::runtime_error(what) {}
};

/// No available method can guarantee the requested relative tolerance.
class ToleranceError : public std::runtime_error {
 public:
  explicit ToleranceError(const std::string& what)
      : std::runtime_error(what) {}
};

/// The adaptive quadrature oracle could not reach its tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace symell
