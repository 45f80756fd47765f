#pragma once

#include <vector>

#include "tsw/exactnum/cyclotomic.hpp"
#include "tsw/groupring/group_algebra.hpp"
#include "tsw/groupring/laurent.hpp"

namespace tsw {

// Free variables of the character components: t1..tb.
std::vector<std::string> free_variable_names(std::size_t b);

// Component chi is sum c * chi(tors g) * x^{free g}, in the order of
// torsion_characters(); coefficients live in Q(zeta_N), N = torsion exponent.
std::vector<CycLaurent> character_decompose(const GroupAlgebraElement& a);

// Inverse transform with weight 1/|Tors|. Throws NonRationalReassembly when a
// coefficient is not rational.
GroupAlgebraElement character_reassemble(const GroupPtr& h, const std::vector<CycLaurent>& components);

// Torsion-supported special case: one value per character.
std::vector<Cyclotomic> torsion_transform(const GroupAlgebraElement& a);
GroupAlgebraElement inverse_torsion_transform(const GroupPtr& h, const std::vector<Cyclotomic>& values);

}  // namespace tsw
