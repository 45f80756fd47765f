#pragma once

#include <vector>

#include "tsw/exactnum/rational.hpp"

namespace tsw {

// Phi_N as coefficients c[0..deg], lowest degree first.
std::vector<long> cyclotomic_polynomial(long n);

long euler_phi(long n);

// Element of Q(zeta_N), stored in the power basis 1, z, ..., z^(phi(N)-1)
// reduced modulo Phi_N, so equality is coefficientwise.
class Cyclotomic {
 public:
  Cyclotomic();
  explicit Cyclotomic(long conductor);
  Cyclotomic(long conductor, const Rational& value);

  static Cyclotomic root_of_unity(long conductor, long exponent);
  // sum_j c[j] z^j for arbitrary j, reduced.
  static Cyclotomic from_powers(long conductor, const std::vector<Rational>& c);

  long conductor() const { return n_; }
  const std::vector<Rational>& coefficients() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  Rational rational_value() const;

  // Image in Q(zeta_M) for M a multiple of the conductor.
  Cyclotomic embed(long m) const;

  Cyclotomic inverse() const;
  Cyclotomic conjugate() const;
  Cyclotomic times_root(long exponent) const;

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Rational& r);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Rational& r) { return a *= r; }
  Cyclotomic operator-() const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  // "a0 + a1*z + ..." with z = zeta_N, or "0".
  std::string to_string() const;

  // Coefficient conjugation hook used by generic polynomial code.
  friend Cyclotomic conj(const Cyclotomic& a) { return a.conjugate(); }

 private:
  void coerce(Cyclotomic& other);
  long n_ = 1;
  std::vector<Rational> c_;
};

inline Rational conj(const Rational& r) { return r; }
inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline bool is_zero(const Cyclotomic& c) { return c.is_zero(); }

}  // namespace tsw
