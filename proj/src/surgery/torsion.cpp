#include "common.hpp"
#include "tsw/error.hpp"
#include "tsw/surgery/torsion.hpp"

namespace tsw {

namespace {

using detail::for_each_subset;
using detail::meridians_of;
using detail::signed_det;

GroupAlgebraElement product_over(const GroupPtr& h, Subset s, const std::vector<GroupAlgebraElement>& factor) {
  GroupAlgebraElement r = GroupAlgebraElement::scalar(h, 1);
  for (std::size_t i : members(s)) r = r * factor[i];
  return r;
}

// Facts about the component n that carries H/Tors alone.
void check_lone_component(const SurgeryPresentation& p, std::size_t n) {
  const FramedLink& l = p.link;
  ensure(l.framing(n) == 0, ErrorKind::Assertion, "lone free component has nonzero framing");
  for (std::size_t i = 0; i < l.size(); ++i)
    ensure(i == n || l.lk(n, i) == 0, ErrorKind::Assertion, "lone free component links another component");
}

// det(l^{I0}) / |Tors H|, which must be +-1.
long lone_ratio(const SurgeryPresentation& p) {
  long d = linking_submatrix(p.link, p.i0).determinant;
  long t = p.h->torsion_order();
  ensure(d % t == 0 && (d / t == 1 || d / t == -1), ErrorKind::Assertion,
         "det(l^I0) / |Tors H| is not +-1");
  return d / t;
}

GroupAlgebraElement push_check(const SurgeryPresentation& p, const ConwayTable& table, Subset sub,
                               const std::vector<long>& k) {
  auto ks = restrict_charge(p.link, k, sub);
  return push_to_group_algebra(nabla_check(p.link, table, sub, ks), p.h, meridians_of(p, sub));
}

QHFraction torsion_qhs_general(const SurgeryPresentation& p, const ConwayTable& table, const std::vector<long>& k) {
  const FramedLink& l = p.link;
  const GroupPtr& h = p.h;
  std::size_t m = l.size();
  Subset full = full_subset(m);
  std::vector<GroupAlgebraElement> red;
  for (const auto& t : p.meridians) red.push_back(reduced_inverse_of_binomial(h, t));

  GroupAlgebraElement sum(h);
  for_each_subset(full, [&](Subset j) {
    if (cardinality(j) > m - 1) return;
    GroupAlgebraElement rj = product_over(h, full & ~j, red);
    for_each_subset(j, [&](Subset i) {
      if (cardinality(i) + 2 > m) return;
      long d = signed_det(l, i);
      if (d == 0) return;
      Subset ibar = full & ~i;
      auto ki = restrict_charge(l, k, ibar);
      QHFraction x = nabla_relative(l, table, ibar, ibar & j, ki);
      GroupAlgebraElement tr(h);
      if (x.group()->free_rank() >= 2) {
        tr = transfer(x.as_polynomial(), h, meridians_of(p, ibar), meridians_of(p, j));
      } else {
        Subset missing = full & ~j;
        ensure(cardinality(missing) == 1 && i != j, ErrorKind::Assertion, "unexpected rank one relative group");
        std::size_t n = members(missing).front();
        auto gens = members(ibar);
        std::size_t pos = 0;
        while (gens[pos] != n) ++pos;
        GroupAlgebraElement y =
            x.times(GroupAlgebraElement::binomial(x.group(), x.group()->generator(pos))).normalized().as_polynomial();
        tr = red[n] * transfer(y, h, meridians_of(p, ibar), meridians_of(p, j));
      }
      sum += (rj * tr).scaled(d);
    });
  });

  for (std::size_t n = 0; n < m; ++n) {
    Subset nbar = full & ~(Subset(1) << n);
    long d = linking_submatrix(l, nbar).determinant;
    if (d == 0) continue;
    GroupAlgebraElement sigma = GroupAlgebraElement::scalar(h, 1);
    for (std::size_t i : members(nbar)) {
      long order = *h->order(p.meridians[i]);
      sigma = sigma * geometric_sum(h, p.meridians[i], order).scaled(ratio(1, order));
    }
    long kn = restrict_charge(l, k, Subset(1) << n).front();
    GroupAlgebraElement term = sigma * red[n] * red[n] * detail::knot_term(p, table, n, kn);
    sum += term.scaled(m % 2 == 0 ? d : -d);
  }
  return QHFraction(sum);
}

QHFraction torsion_qhs_split(const SurgeryPresentation& p, const ConwayTable& table, const std::vector<long>& k,
                          const std::vector<GroupAlgebraElement>& s) {
  const GroupPtr& h = p.h;
  std::size_t m = p.size();
  Subset full = full_subset(m);
  GroupAlgebraElement sum(h);
  for_each_subset(full, [&](Subset i) {
    if (cardinality(i) + 2 > m) return;
    GroupAlgebraElement term = product_over(h, i, s) * push_check(p, table, full & ~i, k);
    sum += cardinality(i) % 2 == 0 ? term : -term;
  });
  for (std::size_t n = 0; n < m; ++n) {
    GroupAlgebraElement rn = reduced_inverse_of_binomial(h, p.meridians[n]);
    GroupAlgebraElement term =
        product_over(h, full & ~(Subset(1) << n), s) * rn * rn * detail::knot_term(p, table, n, k[n]);
    sum += m % 2 == 0 ? term : -term;
  }
  // The closed form above keeps a component at the augmentation character,
  // where the torsion of a rational homology sphere vanishes; project it out.
  Rational eps = 0;
  for (const auto& [g, c] : sum.terms()) eps += c;
  sum -= average(h, h->torsion_elements()).scaled(eps);
  return QHFraction(sum);
}

}  // namespace

QHFraction tau_general(const SurgeryPresentation& p, const ConwayTable& table, const std::vector<long>& k) {
  validate_charge(p.link, k);
  table.require_complete();
  if (p.b1 == 0) return torsion_qhs_general(p, table, k);

  const FramedLink& l = p.link;
  const GroupPtr& h = p.h;
  std::size_t m = l.size();
  Subset full = full_subset(m);
  auto lone = p.lone_free_component();
  if (lone) check_lone_component(p, *lone);

  std::vector<GroupAlgebraElement> red(m, GroupAlgebraElement(h));
  for (std::size_t i : members(p.i0)) red[i] = reduced_inverse_of_binomial(h, p.meridians[i]);

  GroupAlgebraElement sum(h);
  for_each_subset(p.i0, [&](Subset j) {
    GroupAlgebraElement rj = product_over(h, p.i0 & ~j, red);
    for_each_subset(j, [&](Subset i) {
      if (lone && i == p.i0) return;
      long d = signed_det(l, i);
      if (d == 0) return;
      Subset ibar = full & ~i;
      auto ki = restrict_charge(l, k, ibar);
      QHFraction x = nabla_relative(l, table, ibar, ibar & j, ki);
      ensure(x.is_polynomial(), ErrorKind::Assertion, "relative Conway term is not a polynomial");
      GroupAlgebraElement tr = transfer(x.as_polynomial(), h, meridians_of(p, ibar), meridians_of(p, j));
      sum += (rj * tr).scaled(d);
    });
  });
  QHFraction result(sum, meridians_of(p, full & ~p.i0));

  if (lone) {
    std::size_t n = *lone;
    long ratio = lone_ratio(p);
    GroupAlgebraElement tors = average(h, h->torsion_elements()).scaled(h->torsion_order());
    GroupAlgebraElement term = (tors * detail::knot_term(p, table, n, k[n])).scaled(m % 2 == 0 ? ratio : -ratio);
    result += QHFraction(term, {p.meridians[n], p.meridians[n]});
  }
  return result.normalized();
}

QHFraction tau_split(const SurgeryPresentation& p, const ConwayTable& table, const std::vector<long>& k) {
  validate_charge(p.link, k);
  table.require_complete();
  const FramedLink& l = p.link;
  ensure(l.algebraically_split(), ErrorKind::NotSplit, "the link is not algebraically split");
  const GroupPtr& h = p.h;
  std::size_t m = l.size();
  Subset full = full_subset(m);

  std::vector<GroupAlgebraElement> s(m, GroupAlgebraElement(h));
  for (std::size_t i = 0; i < m; ++i) {
    long f = l.framing(i);
    if (f != 0) s[i] = geometric_sum(h, p.meridians[i], f > 0 ? f : -f).scaled(f > 0 ? 1 : -1);
  }
  if (p.b1 == 0) return torsion_qhs_split(p, table, k, s);

  auto lone = p.lone_free_component();
  GroupAlgebraElement sum(h);
  for_each_subset(p.i0, [&](Subset i) {
    if (lone && i == p.i0) return;
    GroupAlgebraElement term = product_over(h, i, s) * push_check(p, table, full & ~i, k);
    sum += cardinality(i) % 2 == 0 ? term : -term;
  });
  QHFraction result(sum);
  if (lone) {
    std::size_t n = *lone;
    GroupAlgebraElement term = product_over(h, p.i0, s) * detail::knot_term(p, table, n, k[n]);
    result += QHFraction(m % 2 == 0 ? term : -term, {p.meridians[n], p.meridians[n]});
  }
  return result.normalized();
}

void assert_integrality(const SurgeryPresentation& p, const QHFraction& t) {
  const GroupPtr& h = p.h;
  if (p.b1 >= 2) {
    QHFraction x = t.normalized();
    ensure(x.is_polynomial() && x.numerator().is_integral(), ErrorKind::Assertion,
           "torsion is not in Z[H] although b1 >= 2");
    return;
  }
  if (p.b1 == 1) {
    std::vector<long> unit{1};
    GroupElement g = h->from_coordinates(unit, std::vector<long>(h->invariant_factors().size(), 0));
    std::vector<GroupElement> probes{g};
    for (const auto& m : p.meridians)
      if (!h->is_torsion(m)) probes.push_back(m);
    for (const auto& a : probes)
      for (const auto& b : probes) {
        GroupAlgebraElement y = t.cleared({a, b});
        ensure(y.is_integral(), ErrorKind::Assertion, "torsion times (h1 - 1)(h2 - 1) is not integral");
      }
    return;
  }
  // The component at the augmentation vanishes. |Tors H| * tau need not be
  // integral: for RP^3 the torsion is +-(1 - t)/8.
  Rational total = 0;
  for (const auto& [g, c] : t.numerator().terms()) total += c;
  ensure(t.is_polynomial() && sgn(total) == 0, ErrorKind::Assertion, "torsion of a rational homology sphere has nonzero augmentation");
}

QHFraction tau(const SurgeryPresentation& p, const ConwayTable& table, const std::vector<long>& k,
               const TauOptions& opt) {
  QHFraction t = tau_general(p, table, k);
  if (opt.check_fast_path && p.link.algebraically_split()) {
    QHFraction s = tau_split(p, table, k);
    ensure(s == t, ErrorKind::Assertion, "split fast path disagrees with the general evaluation: " + s.to_string() +
                                             " vs " + t.to_string());
  }
  assert_integrality(p, t);
  return t;
}

}  // namespace tsw
