#pragma once

#include <stdexcept>
#include <string>

namespace drg {

// Base for all typed errors thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Intersection-array validation failures.  `kind` is stable for tests.
struct ValidationError : Error {
  enum class Kind {
    SizeMismatch,   // b and c lists empty or of different lengths
    NonPositive,    // some b_i <= 0 (i < D) or c_i <= 0
    C1NotOne,       // c_1 != 1
    NonIntegralKi,  // some k_i = k_{i-1} b_{i-1} / c_i not a positive integer
    NegativeAi,     // some a_i = k - b_i - c_i < 0
    NonIntegerEntry,  // a parameter formula produced a non-integer b_i or c_i
  };
  Kind kind;
  ValidationError(Kind k, const std::string& what) : Error(what), kind(k) {}
};

// The terminal identity c_D s_{D-1} + a_D s_D = theta s_D of a cosine
// sequence failed: theta is not an eigenvalue of the array.
struct TerminalIdentityFails : Error {
  using Error::Error;
};

// An operation that needs an all-rational spectrum met an irrational
// eigenvalue (available only as an isolating interval).
struct IrrationalEigenvalue : Error {
  using Error::Error;
};

// Exhaustive Q-polynomial ordering search is capped at diameter 6.
struct DiameterTooLargeForSearch : Error {
  using Error::Error;
};

// theorem_table in strict mode: no Q-polynomial ordering has E1 at theta.
struct NotQPolynomialAtTheta : Error {
  using Error::Error;
};

// classify() accepts diameters 2..8 only.
struct DiameterOutOfRange : Error {
  using Error::Error;
};

// Graph file / edge list problems.
struct GraphFormatError : Error {
  enum class Kind { BadIndex, SelfLoop, DuplicateEdge, Disconnected, Parse };
  Kind kind;
  GraphFormatError(Kind k, const std::string& what) : Error(what), kind(k) {}
};

// A graph failed the distance-regularity certificate; the witness pair is
// carried in the message by the thrower.
struct NotDistanceRegular : Error {
  using Error::Error;
};

// An exactly-built idempotent failed E^2 = E, A E = theta E or trace = m.
struct IdempotencyFailed : Error {
  using Error::Error;
};

// A linear code constant failed its build-time verification (wrong minimum
// distance or weight distribution).
struct CodeVerificationFailed : Error {
  using Error::Error;
};

// Scaled-integer matrix arithmetic would exceed its proven int64/int128
// bounds for this input (none of the supported graphs trigger this).
struct MatrixOverflow : Error {
  using Error::Error;
};

}  // namespace drg
