#include "common.hpp"
#include "tsw/error.hpp"
#include "tsw/surgery/torsion.hpp"

namespace tsw {

namespace {

GroupPtr free_group(const SurgeryPresentation& p) {
  return std::make_shared<FgAbelianGroup>(FgAbelianGroup::free(p.b1));
}

GroupElement in_free(const GroupElement& g) { return GroupElement{g.free, {}}; }

QHFraction to_free_fraction(const GroupPtr& g, const CycFraction& x) {
  GroupAlgebraElement num(g);
  for (const auto& [e, c] : x.numerator().integral_terms()) {
    ensure(c.is_rational(), ErrorKind::Assertion, "free part of the torsion has irrational coefficients");
    num.add_term(GroupElement{e, {}}, c.rational_value());
  }
  std::vector<GroupElement> den;
  for (const auto& v : x.denominator()) {
    ensure(v.root == 0, ErrorKind::Assertion, "free part of the torsion has a root of unity");
    den.push_back(GroupElement{v.exps, {}});
  }
  return QHFraction(num, den).normalized();
}

// The degenerate case I0 = everything but n, evaluated term by term.
QHFraction delta_lone(const SurgeryPresentation& p, const ConwayTable& table, const std::vector<long>& k,
                      std::size_t n, const GroupPtr& g) {
  const FramedLink& l = p.link;
  std::size_t m = l.size();
  Subset full = full_subset(m);
  ensure(l.framing(n) == 0, ErrorKind::Assertion, "lone free component has nonzero framing");
  for (std::size_t i = 0; i < m; ++i)
    ensure(i == n || l.lk(n, i) == 0, ErrorKind::Assertion, "lone free component links another component");
  GroupElement t = in_free(p.meridians[n]);

  GroupAlgebraElement sum(g);
  detail::for_each_subset(p.i0, [&](Subset i) {
    if (i == p.i0) return;
    long d = detail::signed_det(l, i);
    if (d == 0) return;
    Subset ibar = full & ~i;
    auto ki = restrict_charge(l, k, ibar);
    QHFraction x = nabla_relative(l, table, ibar, ibar & p.i0, ki);
    std::vector<GroupElement> images;
    for (std::size_t j : members(ibar)) images.push_back(in_free(p.meridians[j]));
    GroupHom mu(x.group(), g, images);
    sum += map_along(x.as_polynomial(), mu).scaled(d);
  });
  QHFraction result(sum, {t});
  long d = linking_submatrix(l, p.i0).determinant;
  GroupAlgebraElement knot = push_to_group_algebra(table.entry(Subset(1) << n), g, {t})
                                 .shifted(g->scale(t, (k[n] + 1) / 2))
                                 .scaled(m % 2 == 0 ? d : -d);
  result += QHFraction(knot, {t, t});
  return result.normalized();
}

}  // namespace

GroupHom free_projection(const SurgeryPresentation& p) {
  GroupPtr g = free_group(p);
  std::vector<GroupElement> images;
  for (const auto& t : p.meridians) images.push_back(in_free(t));
  return GroupHom(p.h, g, images);
}

QHFraction delta(const SurgeryPresentation& p, const ConwayTable& table, const std::vector<long>& k) {
  ensure(p.b1 >= 1, ErrorKind::NotPositiveB1, "the Alexander function needs b1 >= 1");
  validate_charge(p.link, k);
  table.require_complete();
  GroupPtr g = free_projection(p).target();
  std::vector<MonomialValue> images;
  for (const auto& t : p.meridians) images.push_back({0, t.free});
  Valuation mu(p.h, 1, p.b1, images);
  QHFraction d = to_free_fraction(g, tau_at(p, table, k, mu));
  if (auto lone = p.lone_free_component()) {
    QHFraction e = delta_lone(p, table, k, *lone, g);
    ensure(d == e, ErrorKind::Assertion,
           "Alexander function disagrees between evaluations: " + d.to_string() + " vs " + e.to_string());
  }
  return d;
}

}  // namespace tsw
