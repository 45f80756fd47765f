#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tsw/abgroup/group.hpp"

namespace tsw {

// Bit i set <=> component i (0-based) belongs to the subset.
using Subset = std::uint32_t;

inline constexpr std::size_t kMaxComponents = 24;

std::vector<std::size_t> members(Subset s);
Subset full_subset(std::size_t m);
inline bool contains(Subset s, std::size_t i) { return (s >> i) & 1U; }
inline std::size_t cardinality(Subset s) { return static_cast<std::size_t>(__builtin_popcount(s)); }
// "1,3" (1-based), "" for the empty set
std::string subset_key(Subset s);
Subset parse_subset_key(const std::string& key, std::size_t m);

class FramedLink {
 public:
  // Throws NotSymmetric / InvalidInput.
  FramedLink(std::vector<std::string> names, IntMatrix linking);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const IntMatrix& linking_matrix() const { return lambda_; }
  long lk(std::size_t i, std::size_t j) const { return lambda_(i, j); }
  long framing(std::size_t i) const { return lambda_(i, i); }
  // lk(L_i, L^{s}) summed over j in s, j != i
  long lk_with(std::size_t i, Subset s) const;
  bool algebraically_split() const;

  // Link with one more split component of framing f and linking zero.
  FramedLink with_split_component(const std::string& name, long f) const;

 private:
  std::vector<std::string> names_;
  IntMatrix lambda_;
};

// Parity base: k0_i in {0,1}, k0_i = 1 + sum_{j != i} lk_ij mod 2.
std::vector<long> parity_base(const FramedLink& l);

// Throws BadParity naming the first offending (1-based) component.
std::vector<long> validate_charge(const FramedLink& l, const std::vector<long>& k);

// (k^I)_i = k_i - sum_{j not in I} lk_ij for i in I; listed in increasing i.
std::vector<long> restrict_charge(const FramedLink& l, const std::vector<long>& k, Subset i);
// Same, for a charge k_sub given on the sublink `sub` (listed in increasing
// order of sub) restricted further to i, a subset of sub.
std::vector<long> restrict_charge_within(const FramedLink& l, Subset sub, const std::vector<long>& k_sub, Subset i);

// l^I with the diagonal f_i + lk(L_i, L^{complement}), and its determinant.
struct LinkingSubmatrix {
  IntMatrix matrix;
  long determinant;
};
LinkingSubmatrix linking_submatrix(const FramedLink& l, Subset i);

// H(L^sub, L^rel) for rel a subset of sub: generators t_j (j in sub, in
// increasing order) modulo one relation per i in rel.
GroupPtr relative_group(const FramedLink& l, Subset sub, Subset rel);

}  // namespace tsw
