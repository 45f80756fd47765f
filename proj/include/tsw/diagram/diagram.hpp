#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tsw/groupring/laurent.hpp"
#include "tsw/linkdata/conway.hpp"
#include "tsw/linkdata/link.hpp"

namespace tsw {

// X(a,b,c,d): edge labels counterclockwise, starting at the incoming
// under-edge a; the under strand runs a -> c. The over strand runs d -> b
// (positive crossing) or b -> d (negative).
struct PdCrossing {
  std::array<long, 4> e{};
  bool over_from_d = true;

  int sign() const { return over_from_d ? 1 : -1; }
  long under_in() const { return e[0]; }
  long under_out() const { return e[2]; }
  long over_in() const { return over_from_d ? e[3] : e[1]; }
  long over_out() const { return over_from_d ? e[1] : e[3]; }
};

struct Diagram {
  std::vector<PdCrossing> crossings;
  // Edge labels of each component in traversal order; empty for a circle
  // without crossings.
  std::vector<std::vector<long>> components;
  std::map<long, std::size_t> component_of;

  std::size_t size() const { return components.size(); }
  long linking_number(std::size_t i, std::size_t j) const;
  // Off-diagonal linking numbers, zero diagonal.
  IntMatrix linking_matrix() const;
};

// Traces components of oriented crossings. `seeds` names one edge per
// component (nullopt for a free circle) and fixes the component order;
// without seeds components are ordered by smallest label.
Diagram make_diagram(std::vector<PdCrossing> crossings, std::size_t free_circles = 0,
                     const std::optional<std::vector<std::optional<long>>>& seeds = std::nullopt);

// Grammar (whitespace and commas between items are ignored):
//   pd      := ["PD"] ( "[" items "]" | items )
//   item    := "X" open int "," int "," int "," int close | "O"
//   open    := "(" | "["        close := ")" | "]"
// "O" is a component without crossings. Over-strand directions follow from
// the under strands; a component that never passes under is oriented so
// that its labels increase. Throws MalformedPD with the item position.
Diagram parse_pd(const std::string& text);
std::string to_pd(const Diagram& d);

// Components in `keep`, in their original order; crossings with dropped
// components are erased.
Diagram sub_diagram(const Diagram& d, Subset keep);

// Alexander polynomial in t1..tm from the Wirtinger presentation, up to
// +-monomials: delete the last relation and the generator of the arc
// holding the last edge of component m; for m >= 2 divide by (t_m - 1).
RatLaurent fox_alexander(const Diagram& d);

// One-variable Conway polynomial in "z" by switching crossings towards a
// descending diagram. Throws ResourceLimit after `budget` resolution nodes.
RatLaurent skein_conway(const Diagram& d, std::size_t budget = 200000);

struct NormalizedLink {
  FramedLink link;
  ConwayTable table;
};

// Conway table of every sublink from Fox data: balanced, knots with
// Delta(1) = 1, other signs from Torres descent and then the skein
// polynomial; entries that neither fixes are flagged. Framings are zero.
NormalizedLink normalize_to_table(const Diagram& d);

// Same from raw Alexander polynomials (one per nonempty subset, variables
// in subset order) with optional skein polynomials for the sign.
ConwayTable normalize_alexander(const FramedLink& l, const std::map<Subset, RatLaurent>& raw,
                                const std::map<Subset, RatLaurent>& skein = {});

struct BuiltinLink {
  std::string name;
  std::string pd;
  FramedLink link;
  ConwayTable table;
};

// unknot, hopf, trefoil, figure8, whitehead, torus24, borromean
const std::vector<BuiltinLink>& builtin_links();
// Throws InvalidInput for unknown names.
const BuiltinLink& builtin_link(const std::string& name);

}  // namespace tsw
