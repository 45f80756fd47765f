#pragma once

#include <string>
#include <vector>

#include "tsw/exactnum/cyclotomic.hpp"
#include "tsw/groupring/fraction.hpp"
#include "tsw/groupring/laurent.hpp"

namespace tsw {

// zeta_N^root * x^exps
struct MonomialValue {
  long root = 0;
  std::vector<long> exps;
  bool operator==(const MonomialValue&) const = default;
  bool operator<(const MonomialValue& o) const {
    return exps != o.exps ? exps < o.exps : root < o.root;
  }
};

// Homomorphism from a group into the units zeta^a x^v of Q(zeta_N)(x_1..x_b),
// given by the images of the presentation generators.
class Valuation {
 public:
  Valuation(GroupPtr source, long conductor, std::size_t variables, std::vector<MonomialValue> generator_images);

  MonomialValue operator()(const GroupElement& g) const;
  bool is_one(const MonomialValue& v) const;
  long conductor() const { return n_; }
  std::size_t variables() const { return b_; }
  const GroupPtr& source() const { return source_; }
  const std::vector<MonomialValue>& generator_images() const { return images_; }

  MonomialValue compose(const std::vector<long>& word) const;

 private:
  GroupPtr source_;
  long n_;
  std::size_t b_;
  std::vector<MonomialValue> images_;
};

// numerator / prod (zeta^a x^v - 1) with v != 0, a element of the field
// Q(zeta_N)(x_1..x_b).
class CycFraction {
 public:
  CycFraction(long conductor, std::vector<std::string> vars);
  CycFraction(long conductor, CycLaurent numerator, std::vector<MonomialValue> denominator = {});

  static CycFraction monomial(long conductor, const std::vector<std::string>& vars, const MonomialValue& v);

  long conductor() const { return n_; }
  const CycLaurent& numerator() const { return num_; }
  const std::vector<MonomialValue>& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  CycFraction& operator+=(const CycFraction& o);
  friend CycFraction operator+(CycFraction a, const CycFraction& b) { return a += b; }
  friend CycFraction operator-(CycFraction a, const CycFraction& b) { return a += b.scaled(Rational(-1)); }
  friend CycFraction operator*(const CycFraction& a, const CycFraction& b);
  CycFraction scaled(const Cyclotomic& c) const;
  CycFraction scaled(const Rational& c) const;
  // 1 / (v - 1); v must differ from 1.
  static CycFraction inverse_binomial(long conductor, const std::vector<std::string>& vars, const MonomialValue& v);
  // this * (v - 1)
  CycFraction times_binomial(const MonomialValue& v) const;

  // The numerator after cancelling every denominator factor; NotDivisible
  // when that is impossible.
  CycLaurent as_polynomial() const;

  friend bool operator==(const CycFraction& a, const CycFraction& b);
  std::string to_string() const;

 private:
  long n_;
  CycLaurent num_;
  std::vector<MonomialValue> den_;
};

CycLaurent binomial_polynomial(long conductor, const std::vector<std::string>& vars, const MonomialValue& v);

// phi(num) / prod(phi(h_j) - 1). Factors with phi(h_j) = 1 are cancelled by
// exact division first; if that fails, the factor is traded against one of
// the alternatives (elements with phi != 1) before giving up with NotInDomain.
CycFraction apply_phi_sharp(const QHFraction& x, const Valuation& phi,
                            const std::vector<GroupElement>& alternatives = {});

// phi applied to a group algebra element.
CycLaurent apply_phi(const GroupAlgebraElement& a, const Valuation& phi);

}  // namespace tsw
