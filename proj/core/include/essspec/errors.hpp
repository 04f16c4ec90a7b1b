#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace essspec {

/// Argument outside an operation's documented domain.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation that requires (strong) connectivity was given a graph
/// without it. Carries one ordered pair (from, to) with no path from -> to.
class NotConnected : public std::runtime_error {
 public:
  NotConnected(const std::string& what, int from, int to)
      : std::runtime_error(what), from_(from), to_(to) {}

  int from() const noexcept { return from_; }
  int to() const noexcept { return to_; }

 private:
  int from_;
  int to_;
};

/// Power iteration hit its cap before the enclosure closed.
class NonConvergence : public std::runtime_error {
 public:
  NonConvergence(const std::string& what, double lower, double upper,
                 int iterations)
      : std::runtime_error(what),
        lower_(lower),
        upper_(upper),
        iterations_(iterations) {}

  double lower() const noexcept { return lower_; }
  double upper() const noexcept { return upper_; }
  int iterations() const noexcept { return iterations_; }

 private:
  double lower_;
  double upper_;
  int iterations_;
};

class Unsupported : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter combination for which an extremal construction does not
/// realise the requested minimum degree or essential connectivity.
class ConstructionInfeasible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A lemma check was called on an input violating its preconditions
/// (bridge edge, arc already present, ...).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what
                                    : what),
        line_(line) {}

  /// 1-based line number, or 0 when the format has no lines.
  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace essspec
