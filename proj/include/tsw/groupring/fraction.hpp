#pragma once

#include <string>
#include <vector>

#include "tsw/groupring/group_algebra.hpp"

namespace tsw {

// numerator / prod (h_j - 1), every h_j of infinite order. Denominator
// elements are kept with a positive leading free coordinate, sorted.
class QHFraction {
 public:
  explicit QHFraction(GroupAlgebraElement numerator);
  QHFraction(GroupAlgebraElement numerator, const std::vector<GroupElement>& denominator);

  const GroupPtr& group() const { return num_.group(); }
  const GroupAlgebraElement& numerator() const { return num_; }
  const std::vector<GroupElement>& denominator() const { return den_; }
  bool is_polynomial() const { return den_.empty(); }
  bool is_zero() const { return num_.is_zero(); }

  QHFraction& operator+=(const QHFraction& o);
  QHFraction& operator-=(const QHFraction& o) { return *this += -o; }
  friend QHFraction operator+(QHFraction a, const QHFraction& b) { return a += b; }
  friend QHFraction operator-(QHFraction a, const QHFraction& b) { return a -= b; }
  QHFraction operator-() const;
  friend QHFraction operator*(const QHFraction& a, const QHFraction& b);
  QHFraction scaled(const Rational& c) const;
  QHFraction times(const GroupAlgebraElement& a) const;
  QHFraction bar() const;

  // Cancels every denominator factor that divides the numerator.
  QHFraction normalized() const;

  // this * prod (f - 1) as a group algebra element; NotDivisible when the
  // product still has a denominator.
  GroupAlgebraElement cleared(const std::vector<GroupElement>& factors) const;
  // The element itself; NotDivisible unless it lies in Q[H].
  GroupAlgebraElement as_polynomial() const { return cleared({}); }

  friend bool operator==(const QHFraction& a, const QHFraction& b);

  // "(num) / (h - 1)^e * ..." or the numerator alone.
  std::string to_string() const;

 private:
  GroupAlgebraElement num_;
  std::vector<GroupElement> den_;
};

GroupAlgebraElement product_of_binomials(const GroupPtr& h, const std::vector<GroupElement>& factors);

// Image under a homomorphism that keeps every denominator of infinite order.
QHFraction map_fraction(const QHFraction& x, const GroupHom& f);

}  // namespace tsw
