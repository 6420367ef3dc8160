#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace poplat {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input or a violated precondition.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A size guard (element count, rank, semi-length) was exceeded.
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

/// A word of length 2n that fails x_i + x_{2n+1-i} = 2n+1.
class SymmetryViolation : public InvalidInput {
 public:
  SymmetryViolation(std::string message, int index)
      : InvalidInput(std::move(message)), index_(index) {}

  /// First offending 1-based position.
  int index() const noexcept { return index_; }

 private:
  int index_;
};

/// The cover relation does not describe a lattice.
class NotALattice : public Error {
 public:
  NotALattice(std::string message, std::string first, std::string second)
      : Error(std::move(message)), first_(std::move(first)), second_(std::move(second)) {}

  const std::string& first() const noexcept { return first_; }
  const std::string& second() const noexcept { return second_; }

 private:
  std::string first_;
  std::string second_;
};

class CycleDetected : public Error {
 public:
  using Error::Error;
};

/// A congruence class without a unique minimum (or that is not an interval).
class NonIntervalClass : public Error {
 public:
  using Error::Error;
};

/// A prefactor such as 1/(k+1) did not divide its sum exactly.
class InexactDivision : public Error {
 public:
  using Error::Error;
};

/// Series division or square root applied to a series without a unit constant term.
class SeriesDomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace poplat
