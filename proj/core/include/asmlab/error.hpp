#pragma once

#include <stdexcept>
#include <string>

namespace asmlab {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter violates an operation's precondition (k out of range,
/// genome shorter than the read length, infeasible planting, ...).
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

/// An exact/exhaustive routine was asked to work beyond its configured cap.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// Malformed input file (FASTA, edge list, config).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(what), line_(line) {}
  explicit ParseError(const std::string& what) : Error(what) {}

  /// 1-based line number, 0 when not tied to a line.
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_ = 0;
};

/// The graph admits no edge-covering walk.
class NoCoveringWalk : public Error {
 public:
  using Error::Error;
};

}  // namespace asmlab
