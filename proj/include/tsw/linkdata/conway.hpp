#pragma once

#include <map>
#include <string>
#include <vector>

#include "tsw/groupring/fraction.hpp"
#include "tsw/groupring/laurent.hpp"
#include "tsw/linkdata/link.hpp"

namespace tsw {

// Variables of the entry for a sublink: t<i> for the (1-based) members i.
std::vector<std::string> subset_variables(Subset s);

// Conway data of every nonempty sublink. Knot entries hold the normalized
// Alexander polynomial in the single variable "t"; the others hold the
// Conway function in subset_variables(s).
class ConwayTable {
 public:
  explicit ConwayTable(std::size_t m = 0) : m_(m) {}

  std::size_t size() const { return m_; }
  void set_knot(std::size_t i, const RatLaurent& delta);
  void set_poly(Subset s, const RatLaurent& nabla);
  bool has(Subset s) const { return entries_.count(s) != 0; }
  // Throws IncompleteTable.
  const RatLaurent& entry(Subset s) const;
  const std::map<Subset, RatLaurent>& entries() const { return entries_; }
  std::vector<Subset> missing() const;
  void require_complete() const;

  // Sublinks whose overall sign could not be pinned down when the table was
  // derived from diagrams.
  const std::vector<Subset>& sign_ambiguous() const { return ambiguous_; }
  void mark_sign_ambiguous(Subset s) { ambiguous_.push_back(s); }

  // Replace one stored coefficient (mutation experiments).
  void set_coefficient(Subset s, const std::vector<long>& exps, const Rational& c);

 private:
  std::size_t m_;
  std::map<Subset, RatLaurent> entries_;
  std::vector<Subset> ambiguous_;
};

// For |sub| >= 2: nabla(L^sub, k) = -prod t^{k/2} nabla(t^{1/2}), integral
// (ParityMismatch otherwise). For a knot: the numerator -t^{(k+1)/2} Delta(t)
// of the value over (t - 1). Variables are subset_variables(sub).
RatLaurent nabla_numerator(const ConwayTable& table, Subset sub, const std::vector<long>& k_sub);

// nabla(L^sub, L^rel, k) in Q(H(L^sub, L^rel)), normalized; a plain group
// algebra element whenever that group has rank >= 2.
QHFraction nabla_relative(const FramedLink& l, const ConwayTable& table, Subset sub, Subset rel,
                          const std::vector<long>& k_sub);

// nabla(L^sub, k) / prod (t_i - 1) for algebraically split sublinks.
RatLaurent nabla_check(const FramedLink& l, const ConwayTable& table, Subset sub, const std::vector<long>& k_sub);

// z_l(L^sub): nabla / prod (t_i^2 - 1). Throws NotSplit / NotDivisible.
RatLaurent split_coefficients(const FramedLink& l, const ConwayTable& table, Subset sub);

struct TorresResult {
  bool ok = true;
  std::string detail;
};

// Setting t_i = 1 in nabla(L^sub, k) against (prod_j t_j^{lk_ij} - 1) times
// the sublink term; k_sub is a charge on L^sub.
TorresResult torres_check(const FramedLink& l, const ConwayTable& table, Subset sub, std::size_t i,
                          const std::vector<long>& k_sub);

struct ValidationReport {
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  bool ok() const { return failures.empty(); }
};

// Completeness, knot normalization, bar symmetry, charge parity and every
// Torres identity.
ValidationReport conway_table_validate(const FramedLink& l, const ConwayTable& table);

}  // namespace tsw
