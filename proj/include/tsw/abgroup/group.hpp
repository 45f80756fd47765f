#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tsw/abgroup/matrix.hpp"

namespace tsw {

struct SmithDecomposition {
  IntMatrix U, V, D;
  IntMatrix V_inverse;
};

// U * A * V = D with d_1 | d_2 | ... on the diagonal, all d_i >= 0.
// Pivot: smallest absolute nonzero entry, ties broken row-major.
SmithDecomposition smith_normal_form(const IntMatrix& a);

// Free coordinates first in the ordering, then torsion residues.
struct GroupElement {
  std::vector<long> free;
  std::vector<long> tors;
  auto operator<=>(const GroupElement&) const = default;
  bool operator==(const GroupElement&) const = default;
};

class TorsionCharacter {
 public:
  TorsionCharacter(std::vector<long> residues, std::vector<long> invariants, long exponent);
  // chi(g) = zeta_N^value(g), N = conductor().
  long value(const GroupElement& g) const;
  long conductor() const { return n_; }
  bool is_trivial() const;
  const std::vector<long>& residues() const { return c_; }
  bool operator==(const TorsionCharacter& o) const { return c_ == o.c_ && n_ == o.n_; }

 private:
  std::vector<long> c_;
  std::vector<long> weight_;  // N / d_j
  long n_;
};

// Z^n modulo the row span of a relation matrix (each row is one relation
// among the n generators), with Smith normal forms for elements.
class FgAbelianGroup {
 public:
  static FgAbelianGroup from_relations(const IntMatrix& relations);
  static FgAbelianGroup free(std::size_t rank);

  std::size_t generator_count() const { return n_; }
  std::size_t free_rank() const { return free_rank_; }
  const std::vector<long>& invariant_factors() const { return invariants_; }
  const IntMatrix& relations() const { return relations_; }
  long torsion_order() const;
  // Exponent of the torsion subgroup (1 if trivial).
  long torsion_exponent() const;
  bool is_trivial() const { return free_rank_ == 0 && invariants_.empty(); }

  GroupElement identity() const;
  GroupElement element(const std::vector<long>& word) const;
  GroupElement generator(std::size_t i) const;
  std::vector<long> word(const GroupElement& g) const;
  GroupElement reduce(GroupElement g) const;
  GroupElement from_coordinates(const std::vector<long>& free, const std::vector<long>& tors) const;

  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement negate(const GroupElement& a) const;
  GroupElement scale(const GroupElement& a, long k) const;
  bool is_identity(const GroupElement& a) const;
  bool is_torsion(const GroupElement& a) const;
  std::optional<long> order(const GroupElement& a) const;

  std::vector<GroupElement> torsion_elements() const;
  std::vector<TorsionCharacter> torsion_characters() const;

  // "t1^a*t2^b*s1^c" (free t, torsion s), "1" for the identity.
  std::string render(const GroupElement& g) const;
  std::string describe() const;  // e.g. "Z^2 + Z/2 + Z/4"

  bool same_structure(const FgAbelianGroup& o) const {
    return free_rank_ == o.free_rank_ && invariants_ == o.invariants_;
  }

 private:
  std::size_t n_ = 0;
  std::size_t free_rank_ = 0;
  std::vector<long> invariants_;
  IntMatrix relations_;
  std::vector<std::vector<long>> to_free_, to_tors_;      // coordinate rows, length n
  std::vector<std::vector<long>> from_free_, from_tors_;  // generator words, length n
};

using GroupPtr = std::shared_ptr<const FgAbelianGroup>;

// Subgroup generated by finitely many torsion elements, listed sorted.
std::vector<GroupElement> finite_subgroup(const FgAbelianGroup& h, const std::vector<GroupElement>& gens);

struct Quotient {
  GroupPtr group;                       // H_J = H / <kill>
  std::vector<GroupElement> kernel;     // elements of <kill>, sorted
  GroupElement project(const GroupElement& g) const;
  // One element of the coset p^{-1}(y).
  GroupElement preimage(const GroupElement& y) const;
  GroupPtr source;
};

Quotient quotient_and_kernel(const GroupPtr& h, const std::vector<GroupElement>& kill);

// A homomorphism given by the images of the presentation generators; the
// constructor checks every relation maps to the identity.
class GroupHom {
 public:
  GroupHom(GroupPtr source, GroupPtr target, std::vector<GroupElement> images);
  GroupElement operator()(const GroupElement& g) const;
  const GroupPtr& source() const { return source_; }
  const GroupPtr& target() const { return target_; }

 private:
  GroupPtr source_, target_;
  std::vector<GroupElement> images_;
};

}  // namespace tsw
