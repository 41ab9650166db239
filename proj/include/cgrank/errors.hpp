#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cgrank {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different ambient dimensions.
class DimensionMismatch : public Error {
 public:
  DimensionMismatch(int expected, int got)
      : Error("dimension mismatch: expected " + std::to_string(expected) +
              ", got " + std::to_string(got)) {}
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Some search would exceed its configured size limit.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// A closure round would enumerate more candidates than the configured budget.
class NormBudgetExceeded : public BudgetExceeded {
 public:
  NormBudgetExceeded(std::uint64_t needed, std::uint64_t budget)
      : BudgetExceeded("enumeration budget exceeded: " + std::to_string(needed) +
              " candidates needed, budget " + std::to_string(budget)),
        needed_(needed),
        budget_(budget) {}

  std::uint64_t needed() const { return needed_; }
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t needed_;
  std::uint64_t budget_;
};

/// The gap search passed its cap on δ.
class GapCapExceeded : public BudgetExceeded {
 public:
  explicit GapCapExceeded(std::int64_t cap)
      : BudgetExceeded("gap exceeds the configured cap " + std::to_string(cap)) {}
};

/// The subdivision backtracking visited more nodes than allowed.
class SearchBudgetExceeded : public BudgetExceeded {
 public:
  using BudgetExceeded::BudgetExceeded;
};

/// The 0/1 points of a relaxation differ from the point set it was paired with.
class IntegerPointMismatch : public Error {
 public:
  using Error::Error;
};

/// The Hamming ball scanned by the oracle algorithm contains no member.
class NoFeasibleInBall : public Error {
 public:
  using Error::Error;
};

/// Malformed input text; carries the offending line (1-based).
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& reason)
      : Error("line " + std::to_string(line) + ": " + reason), line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

/// Exact 64-bit arithmetic left its range.
class Overflow : public Error {
 public:
  using Error::Error;
};

}  // namespace cgrank
