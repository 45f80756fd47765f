#pragma once

#include <optional>
#include <vector>

#include "tsw/abgroup/group.hpp"
#include "tsw/linkdata/link.hpp"

namespace tsw {

// H_1 of the surgered manifold, presented by the linking matrix on the
// meridians t_1..t_m.
struct SurgeryPresentation {
  FramedLink link;
  GroupPtr h;
  std::vector<GroupElement> meridians;
  std::size_t b1 = 0;
  Subset i0 = 0;  // components whose meridian has finite order

  std::size_t size() const { return link.size(); }
  // The n with I0 = everything but n, if that is the situation.
  std::optional<std::size_t> lone_free_component() const;
  // Element of H given by prod t_i^{v_i}.
  GroupElement meridian_word(const std::vector<long>& v) const;
};

SurgeryPresentation surgered_homology(const FramedLink& l);

// Euler structures of the surgered manifold as charge classes modulo
// 2 Lambda Z^m. A class is stored as the element (k - k0)/2 of H.
class EulerClasses {
 public:
  explicit EulerClasses(const SurgeryPresentation& p);

  const std::vector<long>& base() const { return k0_; }
  // Validates parity.
  GroupElement class_of(const std::vector<long>& k) const;
  // k0 + 2 * (Smith word of h): the canonical charge of a class.
  std::vector<long> representative(const GroupElement& h) const;
  std::vector<long> canonicalize(const std::vector<long>& k) const { return representative(class_of(k)); }
  bool equal(const std::vector<long>& a, const std::vector<long>& b) const;
  std::vector<long> inverse(const std::vector<long>& k) const;
  // prod [t_i]^{k_i - 1}
  GroupElement chern(const std::vector<long>& k) const;

  // One canonical charge per class. For b1 >= 1 a radius is required and
  // bounds the free coordinates of the class; InfiniteEnumeration otherwise.
  std::vector<std::vector<long>> enumerate(std::optional<long> radius = std::nullopt) const;
  // Classes whose largest free coordinate equals the radius.
  std::vector<std::vector<long>> boundary(long radius) const;

 private:
  SurgeryPresentation p_;
  std::vector<long> k0_;
};

}  // namespace tsw
