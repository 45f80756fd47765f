#pragma once

#include <functional>
#include <vector>

#include "tsw/groupring/group_algebra.hpp"
#include "tsw/linkdata/conway.hpp"
#include "tsw/surgery/presentation.hpp"

namespace tsw::detail {

// Calls f on every subset of s, s itself first, the empty set last.
inline void for_each_subset(Subset s, const std::function<void(Subset)>& f) {
  for (Subset i = s;; i = (i - 1) & s) {
    f(i);
    if (i == 0) break;
  }
}

inline std::vector<GroupElement> meridians_of(const SurgeryPresentation& p, Subset s) {
  std::vector<GroupElement> out;
  for (std::size_t i : members(s)) out.push_back(p.meridians[i]);
  return out;
}

// (-1)^{|I|} det(l^I)
inline long signed_det(const FramedLink& l, Subset i) {
  long d = linking_submatrix(l, i).determinant;
  return cardinality(i) % 2 == 0 ? d : -d;
}

// Delta_{L_n}([t_n]) in Q[H].
inline GroupAlgebraElement knot_alexander_at(const SurgeryPresentation& p, const ConwayTable& table, std::size_t n) {
  return push_to_group_algebra(table.entry(Subset(1) << n), p.h, {p.meridians[n]});
}

// [t_n]^{(k_n' + 1)/2} Delta_{L_n}([t_n]) for the knot charge k_n'.
inline GroupAlgebraElement knot_term(const SurgeryPresentation& p, const ConwayTable& table, std::size_t n, long kn) {
  ensure((kn + 1) % 2 == 0, ErrorKind::Assertion, "knot charge is even");
  return knot_alexander_at(p, table, n).shifted(p.h->scale(p.meridians[n], (kn + 1) / 2));
}

}  // namespace tsw::detail
