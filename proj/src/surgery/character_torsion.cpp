#include "common.hpp"
#include "tsw/error.hpp"
#include "tsw/groupring/characters.hpp"
#include "tsw/surgery/torsion.hpp"

namespace tsw {

Valuation character_valuation(const SurgeryPresentation& p, const TorsionCharacter& chi) {
  std::vector<MonomialValue> images;
  for (const auto& t : p.meridians) images.push_back({chi.value(t), t.free});
  return Valuation(p.h, chi.conductor(), p.b1, images);
}

CycFraction tau_at(const SurgeryPresentation& p, const ConwayTable& table, const std::vector<long>& k,
                   const Valuation& phi) {
  validate_charge(p.link, k);
  const FramedLink& l = p.link;
  std::size_t m = l.size();
  Subset full = full_subset(m);
  long n = phi.conductor();
  auto vars = free_variable_names(phi.variables());

  std::vector<MonomialValue> vals;
  Subset iphi = 0;
  for (std::size_t i = 0; i < m; ++i) {
    vals.push_back(phi(p.meridians[i]));
    if (phi.is_one(vals.back())) iphi |= Subset(1) << i;
  }
  if (iphi == full) fail(ErrorKind::TrivialCharacter, "the character is trivial on H");

  CycFraction acc(n, vars);
  detail::for_each_subset(iphi, [&](Subset i) {
    long d = detail::signed_det(l, i);
    if (d == 0) return;
    Subset ibar = full & ~i;
    auto ki = restrict_charge(l, k, ibar);
    QHFraction x = nabla_relative(l, table, ibar, ibar & iphi, ki);
    std::vector<MonomialValue> images;
    for (std::size_t j : members(ibar)) images.push_back(vals[j]);
    Valuation phi_i(x.group(), n, phi.variables(), images);
    std::vector<GroupElement> alternatives;
    for (std::size_t c = 0; c < x.group()->generator_count(); ++c) alternatives.push_back(x.group()->generator(c));
    acc += apply_phi_sharp(x, phi_i, alternatives).scaled(Rational(d));
  });
  for (std::size_t i = 0; i < m; ++i)
    if (!contains(iphi, i)) acc = acc * CycFraction::inverse_binomial(n, vars, vals[i]);
  return acc;
}

CycFraction tau_character(const SurgeryPresentation& p, const ConwayTable& table, const std::vector<long>& k,
                          const TorsionCharacter& chi) {
  return tau_at(p, table, k, character_valuation(p, chi));
}

}  // namespace tsw
