#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace brho {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed term or sequence text. `position` is a 0-based byte offset.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A reduction ran out of its step budget.
class StepBudgetExceeded : public Error {
 public:
  explicit StepBudgetExceeded(std::uint64_t budget)
      : Error("reduction step budget of " + std::to_string(budget) + " exceeded"), budget_(budget) {}
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t budget_;
};

/// A normal form is not of the ordered-linear shape every B-term has.
class NotBFormShape : public Error {
 public:
  using Error::Error;
};

/// No cycle was detected before the iterate index reached the horizon.
class NotFound : public Error {
 public:
  explicit NotFound(std::uint64_t max_steps)
      : Error("no cycle found within " + std::to_string(max_steps) + " steps"), max_steps_(max_steps) {}
  std::uint64_t max_steps() const noexcept { return max_steps_; }

 private:
  std::uint64_t max_steps_;
};

class CheckpointIo : public Error {
 public:
  using Error::Error;
};

class FormatVersionMismatch : public CheckpointIo {
 public:
  using CheckpointIo::CheckpointIo;
};

/// Degree or counter arithmetic left the 64-bit range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// strip_and_lower was handed a sequence with no positive degree.
class AllZero : public Error {
 public:
  AllZero() : Error("degree sequence has no positive degree") {}
};

}  // namespace brho
