#pragma once

#include <stdexcept>
#include <string>

namespace segre {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller handed in something outside an operation's domain.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public InvalidArgument {
 public:
  DivisionByZero() : InvalidArgument("division by zero") {}
};

class IndexOutOfRange : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class DimensionMismatch : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class ZeroEntry : public InvalidArgument {
 public:
  ZeroEntry(int i, int j, int k)
      : InvalidArgument("ZeroEntry: w[" + std::to_string(i) + "][" + std::to_string(j) + "][" +
                        std::to_string(k) + "] is zero"),
        i_(i), j_(j), k_(k) {}
  int i() const { return i_; }
  int j() const { return j_; }
  int k() const { return k_; }

 private:
  int i_, j_, k_;
};

/// Malformed textual input (rational strings, JSON documents, factor names).
class ParseError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// A randomized constructor exhausted its retry budget.
class GenerationFailed : public Error {
 public:
  using Error::Error;
};

class NotZeroDimensional : public Error {
 public:
  using Error::Error;
};

class ResourceBudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace segre
