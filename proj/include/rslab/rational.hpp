#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace rslab {

using Integer = mpz_class;
using Rational = mpq_class;

inline Integer factorial(long n) {
  if (n < 0) throw std::domain_error("factorial of negative integer");
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

// Parses "p/q" or "p". Throws on malformed input or q == 0.
inline Rational rational_from_string(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

// Canonical "p/q" with q > 0, including "/1".
inline std::string rational_to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline double to_double(const Rational& q) { return q.get_d(); }

inline Rational pow_rational(Rational base, long e) {
  if (e < 0) {
    if (base == 0) throw std::domain_error("0 to a negative power");
    base = 1 / base;
    e = -e;
  }
  Rational r = 1;
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

}  // namespace rslab
