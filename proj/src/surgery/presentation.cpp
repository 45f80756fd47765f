#include "tsw/surgery/presentation.hpp"

#include <algorithm>

#include "tsw/error.hpp"

namespace tsw {

std::optional<std::size_t> SurgeryPresentation::lone_free_component() const {
  Subset rest = full_subset(size()) & ~i0;
  if (cardinality(rest) != 1) return std::nullopt;
  return members(rest).front();
}

GroupElement SurgeryPresentation::meridian_word(const std::vector<long>& v) const {
  ensure(v.size() == size(), ErrorKind::Assertion, "meridian word has the wrong length");
  return h->element(v);
}

SurgeryPresentation surgered_homology(const FramedLink& l) {
  SurgeryPresentation p{l, nullptr, {}, 0, 0};
  p.h = std::make_shared<FgAbelianGroup>(FgAbelianGroup::from_relations(l.linking_matrix()));
  for (std::size_t i = 0; i < l.size(); ++i) {
    p.meridians.push_back(p.h->generator(i));
    if (p.h->is_torsion(p.meridians.back())) p.i0 |= Subset(1) << i;
  }
  p.b1 = p.h->free_rank();
  ensure(p.b1 == l.size() - rank(l.linking_matrix()), ErrorKind::Assertion, "b1 disagrees with the rank of Lambda");
  return p;
}

EulerClasses::EulerClasses(const SurgeryPresentation& p) : p_(p), k0_(parity_base(p.link)) {}

GroupElement EulerClasses::class_of(const std::vector<long>& k) const {
  validate_charge(p_.link, k);
  std::vector<long> half(k.size());
  for (std::size_t i = 0; i < k.size(); ++i) half[i] = (k[i] - k0_[i]) / 2;
  return p_.h->element(half);
}

std::vector<long> EulerClasses::representative(const GroupElement& h) const {
  auto w = p_.h->word(h);
  std::vector<long> k(k0_);
  for (std::size_t i = 0; i < k.size(); ++i) k[i] = checked_add(k[i], checked_mul(2, w[i]));
  return k;
}

bool EulerClasses::equal(const std::vector<long>& a, const std::vector<long>& b) const {
  return class_of(a) == class_of(b);
}

std::vector<long> EulerClasses::inverse(const std::vector<long>& k) const {
  validate_charge(p_.link, k);
  std::vector<long> out(k.size());
  for (std::size_t i = 0; i < k.size(); ++i) out[i] = 2 - k[i];
  return out;
}

GroupElement EulerClasses::chern(const std::vector<long>& k) const {
  validate_charge(p_.link, k);
  std::vector<long> w(k.size());
  for (std::size_t i = 0; i < k.size(); ++i) w[i] = k[i] - 1;
  return p_.h->element(w);
}

std::vector<std::vector<long>> EulerClasses::enumerate(std::optional<long> radius) const {
  std::size_t b = p_.b1;
  if (b > 0 && !radius) fail(ErrorKind::InfiniteEnumeration, "b1 > 0: Euler classes need an enumeration window");
  long r = b > 0 ? *radius : 0;
  ensure(r >= 0, ErrorKind::InvalidInput, "window radius must be nonnegative");
  std::vector<GroupElement> classes;
  auto tors = p_.h->torsion_elements();
  std::vector<long> free(b, -r);
  while (true) {
    for (const auto& t : tors) classes.push_back(p_.h->from_coordinates(free, t.tors));
    std::size_t i = 0;
    while (i < b && free[i] == r) free[i++] = -r;
    if (i == b) break;
    ++free[i];
  }
  std::sort(classes.begin(), classes.end());
  std::vector<std::vector<long>> out;
  for (const auto& c : classes) out.push_back(representative(c));
  return out;
}

std::vector<std::vector<long>> EulerClasses::boundary(long radius) const {
  std::vector<std::vector<long>> out;
  for (auto& k : enumerate(radius)) {
    auto c = class_of(k);
    long top = 0;
    for (long x : c.free) top = std::max(top, x < 0 ? -x : x);
    if (top == radius) out.push_back(std::move(k));
  }
  return out;
}

}  // namespace tsw
