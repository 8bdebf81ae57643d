#pragma once

#include <stdexcept>
#include <string>

namespace depthlab {

// Base class for every contract violation the library reports.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Field inverse of zero.
struct DivisionByZero : Error {
  DivisionByZero() : Error("division by zero in prime field") {}
};

// Structurally incompatible operands (variable counts, ranks, sizes).
struct ShapeError : Error {
  using Error::Error;
};

// Inhomogeneous input where graded data is required, or degree mismatches.
struct GradingError : Error {
  using Error::Error;
};

// Operands over different rings.
struct RingError : Error {
  using Error::Error;
};

// Invalid argument values (zero module where forbidden, unit quotient, ...).
struct InputError : Error {
  using Error::Error;
};

// A request exceeded a computed or configured resolution bound.
struct BoundError : Error {
  using Error::Error;
};

// An operation's documented precondition failed; carries the offending
// depth when the precondition is a positivity requirement.
struct PreconditionError : Error {
  explicit PreconditionError(const std::string& what, int depth = -1)
      : Error(what), failing_depth(depth) {}
  int failing_depth;
};

// Randomized construction could not produce a valid object within its retry
// budget.
struct GenerationError : Error {
  using Error::Error;
};

// Seeded search for a regular element ran out of candidates.
struct SearchExhausted : Error {
  using Error::Error;
};

// Instance-file syntax error with position information.
struct ParseError : Error {
  ParseError(const std::string& what, int line_, int column_)
      : Error(what + " (line " + std::to_string(line_) + ", column " +
              std::to_string(column_) + ")"),
        line(line_),
        column(column_) {}
  explicit ParseError(const std::string& what) : Error(what), line(0), column(0) {}
  int line;
  int column;
};

// Reference to an undefined module or family name.
struct NameError : Error {
  using Error::Error;
};

// The kernel detected an internal inconsistency (e.g. the two depth oracles
// disagree). Always a bug; never caught and repaired silently.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace depthlab
