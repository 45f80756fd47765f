#include "tsw/groupring/fraction.hpp"

#include <algorithm>
#include <sstream>

#include "tsw/error.hpp"

namespace tsw {

namespace {

bool leading_negative(const GroupElement& g) {
  for (long x : g.free)
    if (x != 0) return x < 0;
  return false;
}

// Multiset difference a \ b for sorted inputs.
std::vector<GroupElement> missing(const std::vector<GroupElement>& a, const std::vector<GroupElement>& b) {
  std::vector<GroupElement> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

GroupAlgebraElement product_of_binomials(const GroupPtr& h, const std::vector<GroupElement>& factors) {
  GroupAlgebraElement p = GroupAlgebraElement::scalar(h, 1);
  for (const auto& f : factors) p = p * GroupAlgebraElement::binomial(h, f);
  return p;
}

QHFraction::QHFraction(GroupAlgebraElement numerator) : num_(std::move(numerator)) {}

QHFraction::QHFraction(GroupAlgebraElement numerator, const std::vector<GroupElement>& denominator)
    : num_(std::move(numerator)) {
  const GroupPtr& h = num_.group();
  for (GroupElement g : denominator) {
    ensure(!h->is_torsion(g), ErrorKind::Assertion, "denominator factor " + h->render(g) + " has finite order");
    if (leading_negative(g)) {
      // 1/(g-1) = -g^{-1} / (g^{-1} - 1)
      g = h->negate(g);
      num_ = num_.shifted(g).scaled(-1);
    }
    den_.push_back(g);
  }
  std::sort(den_.begin(), den_.end());
  if (num_.is_zero()) den_.clear();
}

QHFraction& QHFraction::operator+=(const QHFraction& o) {
  std::vector<GroupElement> add_here = missing(o.den_, den_);
  std::vector<GroupElement> add_there = missing(den_, o.den_);
  const GroupPtr& h = group();
  GroupAlgebraElement n = num_ * product_of_binomials(h, add_here) + o.num_ * product_of_binomials(h, add_there);
  std::vector<GroupElement> d = den_;
  d.insert(d.end(), add_here.begin(), add_here.end());
  *this = QHFraction(std::move(n), d);
  return *this;
}

QHFraction QHFraction::operator-() const { return scaled(-1); }

QHFraction operator*(const QHFraction& a, const QHFraction& b) {
  std::vector<GroupElement> d = a.den_;
  d.insert(d.end(), b.den_.begin(), b.den_.end());
  return QHFraction(a.num_ * b.num_, d);
}

QHFraction QHFraction::scaled(const Rational& c) const {
  QHFraction r(*this);
  r.num_ = num_.scaled(c);
  if (r.num_.is_zero()) r.den_.clear();
  return r;
}

QHFraction QHFraction::times(const GroupAlgebraElement& a) const { return *this * QHFraction(a); }

QHFraction QHFraction::bar() const {
  const GroupPtr& h = group();
  std::vector<GroupElement> d;
  for (const auto& g : den_) d.push_back(h->negate(g));
  return QHFraction(num_.bar(), d);
}

QHFraction QHFraction::normalized() const {
  QHFraction r(*this);
  std::vector<GroupElement> kept;
  for (const auto& g : den_) {
    if (auto q = try_exact_divide(r.num_, g)) {
      r.num_ = std::move(*q);
    } else {
      kept.push_back(g);
    }
  }
  r.den_ = kept;
  return r;
}

GroupAlgebraElement QHFraction::cleared(const std::vector<GroupElement>& factors) const {
  GroupAlgebraElement n = num_ * product_of_binomials(group(), factors);
  for (const auto& g : den_) n = exact_divide(n, g);
  return n;
}

bool operator==(const QHFraction& a, const QHFraction& b) {
  if (!a.group()->same_structure(*b.group())) return false;
  return a.num_ * product_of_binomials(a.group(), b.den_) == b.num_ * product_of_binomials(b.group(), a.den_);
}

std::string QHFraction::to_string() const {
  if (den_.empty()) return num_.to_string();
  std::ostringstream out;
  out << "(" << num_.to_string() << ") / ";
  const GroupPtr& h = group();
  bool first = true;
  for (std::size_t i = 0; i < den_.size();) {
    std::size_t j = i;
    while (j < den_.size() && den_[j] == den_[i]) ++j;
    if (!first) out << " * ";
    first = false;
    out << "(" << h->render(den_[i]) << " - 1)";
    if (j - i > 1) out << "^" << (j - i);
    i = j;
  }
  return out.str();
}

QHFraction map_fraction(const QHFraction& x, const GroupHom& f) {
  std::vector<GroupElement> d;
  for (const auto& g : x.denominator()) {
    GroupElement y = f(g);
    ensure(!f.target()->is_torsion(y), ErrorKind::NotInDomain,
           "denominator factor maps to an element of finite order");
    d.push_back(y);
  }
  return QHFraction(map_along(x.numerator(), f), d);
}

}  // namespace tsw
