#pragma once

#include <stdexcept>
#include <string>

namespace hartogs {

/// A point or parameter lies outside the domain an operation is defined on.
class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Evaluation requested at (or numerically indistinguishable from) a pole.
class SingularityError : public DomainError {
  public:
    using DomainError::DomainError;
};

/// An adaptive numerical process failed to meet its tolerance.
class NonConvergenceError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

} // namespace hartogs
