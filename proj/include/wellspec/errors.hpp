#pragma once

#include <stdexcept>
#include <string>

namespace wellspec {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Delta function placed on or outside a wall.
class PositionOutOfRange : public Error {
 public:
  using Error::Error;
};

/// Zero or non-finite coupling.
class InvalidCoupling : public Error {
 public:
  using Error::Error;
};

/// A root bracket did not polish to a certified root.
class SolverFailure : public Error {
 public:
  SolverFailure(const std::string& what, double lo, double hi)
      : Error(what), lo_(lo), hi_(hi) {}

  double bracket_lo() const noexcept { return lo_; }
  double bracket_hi() const noexcept { return hi_; }

 private:
  double lo_;
  double hi_;
};

/// An eigenstate does not satisfy the dispersion relation of the config it is
/// being used with.
class InconsistentState : public Error {
 public:
  using Error::Error;
};

/// Evaluation point outside [0, 1].
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Eigensolver iteration budget exhausted.
class ConvergenceFailure : public Error {
 public:
  ConvergenceFailure(const std::string& what, std::size_t index, int iterations)
      : Error(what), index_(index), iterations_(iterations) {}

  std::size_t index() const noexcept { return index_; }
  int iterations() const noexcept { return iterations_; }

 private:
  std::size_t index_;
  int iterations_;
};

}  // namespace wellspec
