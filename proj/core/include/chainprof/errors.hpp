#pragma once

#include <stdexcept>
#include <string>

namespace chainprof {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IndexError : Error {
  using Error::Error;
};

struct CycleError : Error {
  using Error::Error;
};

struct DuplicateEdgeError : Error {
  using Error::Error;
};

/// An edge whose endpoints are also connected by a longer directed path.
struct RedundantEdgeError : Error {
  int from;
  int to;
  RedundantEdgeError(int from_, int to_)
      : Error("edge (" + std::to_string(from_) + ", " + std::to_string(to_) +
              ") is redundant: an alternate directed path connects its endpoints"),
        from(from_),
        to(to_) {}
};

struct EmptyPosetError : Error {
  using Error::Error;
};

struct BudgetExceededError : Error {
  using Error::Error;
};

struct InvalidProfileError : Error {
  using Error::Error;
};

struct SizeError : Error {
  using Error::Error;
};

struct NotMaximumChainError : Error {
  using Error::Error;
};

struct CapBelowLowerBoundError : Error {
  using Error::Error;
};

struct ParseError : Error {
  int line;
  ParseError(int line_, const std::string& what_)
      : Error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

}  // namespace chainprof
