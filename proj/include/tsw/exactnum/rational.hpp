#pragma once

#include <gmpxx.h>

#include <string>

namespace tsw {

using Integer = mpz_class;
using Rational = mpq_class;

// "p" or "p/q" with q > 0.
inline std::string to_string(const Rational& r) { return r.get_str(); }

// Accepts "p", "-p", "p/q"; throws InvalidInput otherwise.
Rational parse_rational(const std::string& text);

// n/d in lowest terms (mpq_class(n, d) does not reduce).
inline Rational ratio(long n, long d) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline int sign(const Rational& r) { return sgn(r); }

}  // namespace tsw
