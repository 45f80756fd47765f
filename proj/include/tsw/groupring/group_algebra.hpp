#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tsw/abgroup/group.hpp"
#include "tsw/exactnum/rational.hpp"
#include "tsw/groupring/laurent.hpp"

namespace tsw {

// Element of Q[H].
class GroupAlgebraElement {
 public:
  explicit GroupAlgebraElement(GroupPtr group);
  static GroupAlgebraElement unit(GroupPtr group, const GroupElement& h, const Rational& c = 1);
  static GroupAlgebraElement scalar(GroupPtr group, const Rational& c);

  const GroupPtr& group() const { return group_; }
  const std::map<GroupElement, Rational>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  void add_term(const GroupElement& h, const Rational& c);
  Rational coefficient(const GroupElement& h) const;
  bool is_zero() const { return terms_.empty(); }
  bool is_integral() const;
  bool is_torsion_supported() const;

  GroupAlgebraElement& operator+=(const GroupAlgebraElement& o);
  GroupAlgebraElement& operator-=(const GroupAlgebraElement& o);
  friend GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a += b; }
  friend GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a -= b; }
  GroupAlgebraElement operator-() const;
  friend GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
  GroupAlgebraElement scaled(const Rational& c) const;
  GroupAlgebraElement shifted(const GroupElement& h) const;  // times h
  GroupAlgebraElement bar() const;
  // h - 1
  static GroupAlgebraElement binomial(GroupPtr group, const GroupElement& h);

  friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b);

  // "c*g + c*g" in canonical order, "0" when empty.
  std::string to_string() const;

 private:
  void check_group(const GroupAlgebraElement& o) const;
  GroupPtr group_;
  std::map<GroupElement, Rational> terms_;
};

// Ring map t_i -> assignment[i]; needs integral exponents.
GroupAlgebraElement push_to_group_algebra(const RatLaurent& p, const GroupPtr& h,
                                          const std::vector<GroupElement>& assignment);

GroupAlgebraElement map_along(const GroupAlgebraElement& a, const GroupHom& f);

// q with q * (h - 1) = a for h of infinite order; NotDivisible otherwise.
GroupAlgebraElement exact_divide(const GroupAlgebraElement& a, const GroupElement& h);
std::optional<GroupAlgebraElement> try_exact_divide(const GroupAlgebraElement& a, const GroupElement& h);

// Componentwise inverse over the characters of Tors H, zero where a vanishes.
GroupAlgebraElement reduced_inverse(const GroupAlgebraElement& a);

// ((1-n) + (3-n) t + ... + (n-1) t^{n-1}) / (2n) for t of order n; 0 for t = 1.
GroupAlgebraElement reduced_inverse_of_binomial(const GroupPtr& h, const GroupElement& t);

// (1/|S|) * sum of the elements of S.
GroupAlgebraElement average(const GroupPtr& h, const std::vector<GroupElement>& elements);

// Sum of h^j for 0 <= j < n.
GroupAlgebraElement geometric_sum(const GroupPtr& h, const GroupElement& g, long n);

// a^tr for a over a group H' whose presentation generators map to
// generator_images in H, with p: H -> H / <kill>. The kill elements must be
// torsion and every relation of H' must land in <kill>.
GroupAlgebraElement transfer(const GroupAlgebraElement& a, const GroupPtr& h,
                             const std::vector<GroupElement>& generator_images,
                             const std::vector<GroupElement>& kill);

}  // namespace tsw
