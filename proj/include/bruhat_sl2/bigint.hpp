#ifndef BRUHAT_SL2_BIGINT_HPP
#define BRUHAT_SL2_BIGINT_HPP

#include <gmpxx.h>

#include <string>

#include "bruhat_sl2/errors.hpp"

namespace bruhat_sl2 {

// All matrix and polynomial arithmetic runs over arbitrary-precision
// integers; the identities being checked are exact.
using Int = mpz_class;

inline Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline std::string to_string(const Int& v) { return v.get_str(); }

// Quotient of an exactly divisible pair.  Throws InexactDivision otherwise;
// callers rely on theorems that guarantee divisibility, so a remainder is a
// bug signal, never a recoverable condition.
inline Int exact_div(const Int& num, const Int& den, const char* context) {
  if (den == 0) throw InexactDivision(std::string(context) + ": division by zero");
  Int q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (r != 0) {
    throw InexactDivision(std::string(context) + ": " + num.get_str() + " not divisible by " +
                          den.get_str());
  }
  return q;
}

}  // namespace bruhat_sl2

#endif  // BRUHAT_SL2_BIGINT_HPP
