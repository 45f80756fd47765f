#pragma once

#include <vector>

#include "tsw/groupring/field_element.hpp"
#include "tsw/groupring/fraction.hpp"
#include "tsw/linkdata/conway.hpp"
#include "tsw/surgery/presentation.hpp"

namespace tsw {

// phi: H -> Q(zeta_N)(t1..tb), phi(h) = zeta_N^{chi(h)} x^{free(h)}.
Valuation character_valuation(const SurgeryPresentation& p, const TorsionCharacter& chi);

// The torsion component at one character. TrivialCharacter when every
// meridian maps to 1.
CycFraction tau_character(const SurgeryPresentation& p, const ConwayTable& table, const std::vector<long>& k,
                          const TorsionCharacter& chi);
// Same with an arbitrary valuation of H (conductor 1 gives the free part).
CycFraction tau_at(const SurgeryPresentation& p, const ConwayTable& table, const std::vector<long>& k,
                   const Valuation& phi);

struct TauOptions {
  // Cross-assert the split fast path against the general evaluation.
  bool check_fast_path = true;
};

// tau(M, e_k, omega_L) in Q(H), normalized.
QHFraction tau(const SurgeryPresentation& p, const ConwayTable& table, const std::vector<long>& k,
               const TauOptions& opt = {});
// The general evaluation only, and the split fast path only (NotSplit).
QHFraction tau_general(const SurgeryPresentation& p, const ConwayTable& table, const std::vector<long>& k);
QHFraction tau_split(const SurgeryPresentation& p, const ConwayTable& table, const std::vector<long>& k);

// Throws Assertion if tau violates the integrality expected for its b1
// (augmentation zero when b1 = 0).
void assert_integrality(const SurgeryPresentation& p, const QHFraction& t);

// The Alexander function over G = H/Tors. NotPositiveB1 when b1 = 0.
QHFraction delta(const SurgeryPresentation& p, const ConwayTable& table, const std::vector<long>& k);
// Free quotient G and the projection H -> G.
GroupHom free_projection(const SurgeryPresentation& p);

}  // namespace tsw
