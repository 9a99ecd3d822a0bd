#ifndef BRUHAT_SL2_ERRORS_HPP
#define BRUHAT_SL2_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bruhat_sl2 {

// Base class for every error raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed textual input (non-bijection words, bad integers, ...).
struct ParseError : Error {
  using Error::Error;
};

// The top of a weak-order interval must avoid the pattern 132.
struct Non132Avoiding : Error {
  using Error::Error;
};

// Interval construction exceeded the configured element bound.
struct IntervalTooLarge : Error {
  using Error::Error;
};

// A permutation expected to lie in [e,pi]_R does not.
struct NotInInterval : Error {
  using Error::Error;
};

// sigma is not below pi in the right weak order.
struct NotBelowPi : Error {
  using Error::Error;
};

// The pair (sigma, sigma t_ij) is not a strong-order cover.
struct NotAStrongCover : Error {
  using Error::Error;
};

// A division guaranteed exact by a theorem left a remainder.  Seeing this
// means the implementation is wrong, not the input.
struct InexactDivision : Error {
  using Error::Error;
};

struct TooLargeForBruteForce : Error {
  using Error::Error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

// A monomial exponent escaped its padding bound; fatal, indicates a bug.
struct PaddingViolation : Error {
  using Error::Error;
};

// A computation contradicted an exact theorem it relies on.
struct TheoremViolation : Error {
  using Error::Error;
};

}  // namespace bruhat_sl2

#endif  // BRUHAT_SL2_ERRORS_HPP
