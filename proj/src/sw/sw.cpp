#include "tsw/sw/sw.hpp"

#include "tsw/error.hpp"
#include "tsw/groupring/series.hpp"
#include "tsw/surgery/torsion.hpp"
#include "tsw/util/parallel.hpp"

namespace tsw {

namespace {

Integer as_integer(const Rational& r, const std::string& what) {
  ensure(r.get_den() == 1, ErrorKind::Assertion, what + " is not an integer: " + r.get_str());
  return r.get_num();
}

GroupElement direction_or_default(const SurgeryPresentation& p, const std::optional<GroupElement>& d) {
  return d ? *d : default_direction(p);
}

Rational coefficient_of_one(const SurgeryPresentation& p, const QHFraction& t) {
  return t.as_polynomial().coefficient(p.h->identity());
}

// sum of z_l over the exponent vectors l with l_i = target_i for f_i = 0
// and l_i = target_i mod 2 f_i otherwise
Integer congruent_sum(const RatLaurent& z, const std::vector<long>& f, const std::vector<long>& target) {
  Rational s = 0;
  for (const auto& [l, c] : z.integral_terms()) {
    bool hit = true;
    for (std::size_t i = 0; i < l.size() && hit; ++i) {
      long diff = l[i] - target[i];
      hit = f[i] == 0 ? diff == 0 : diff % (2 * f[i]) == 0;
    }
    if (hit) s += c;
  }
  return as_integer(s, "split sum");
}

}  // namespace

GroupElement default_direction(const SurgeryPresentation& p) {
  auto n = p.lone_free_component();
  if (p.b1 != 1 || !n) fail(ErrorKind::NeedsDirection, "b1 = 1 here needs an explicit direction t");
  return p.meridians[*n];
}

Integer sw_value(const SurgeryPresentation& p, const ConwayTable& table, const std::vector<long>& k,
                 const std::optional<GroupElement>& direction) {
  ensure(p.b1 >= 1, ErrorKind::NotPositiveB1, "the SW function needs b1 >= 1");
  QHFraction t = tau(p, table, k);
  if (p.b1 >= 2) return as_integer(coefficient_of_one(p, t), "SW value");
  GroupElement d = direction_or_default(p, direction);
  return as_integer(series_coefficient(t, p.h->negate(d), p.h->identity()), "SW value");
}

std::size_t SwTable::support_size() const {
  std::size_t n = 0;
  for (const auto& e : entries)
    if (e.value != 0) ++n;
  return n;
}

SwTable sw_table(const SurgeryPresentation& p, const ConwayTable& table, long radius,
                 const std::optional<GroupElement>& direction) {
  ensure(p.b1 >= 1, ErrorKind::NotPositiveB1, "the SW function needs b1 >= 1");
  SwTable out;
  out.radius = radius;
  std::optional<GroupElement> d;
  if (p.b1 == 1) {
    d = direction_or_default(p, direction);
    out.direction = p.h->render(*d);
  }
  auto charges = EulerClasses(p).enumerate(radius);
  auto values = parallel_map<Integer>(charges.size(), [&](std::size_t i) { return sw_value(p, table, charges[i], d); });
  for (std::size_t i = 0; i < charges.size(); ++i) out.entries.push_back({charges[i], values[i]});
  return out;
}

Integer sw_split_value(const SurgeryPresentation& p, const ConwayTable& table, const std::vector<long>& k) {
  const FramedLink& l = p.link;
  ensure(l.algebraically_split(), ErrorKind::NotSplit, "the link is not algebraically split");
  ensure(p.b1 >= 1, ErrorKind::NotPositiveB1, "the SW function needs b1 >= 1");
  validate_charge(l, k);
  table.require_complete();
  std::size_t m = l.size();
  Subset full = full_subset(m);
  Subset j0 = full & ~p.i0;

  Integer total = 0;
  for (Subset j = full;; j = (j - 1) & full) {
    if ((j & j0) == j0 && cardinality(j) >= 2) {
      auto idx = members(j);
      std::vector<long> f, target;
      for (std::size_t i : idx) {
        f.push_back(l.framing(i));
        target.push_back(-k[i]);
      }
      int sign = cardinality(j) % 2 == 0 ? 1 : -1;
      for (std::size_t i : members(full & ~j))
        if (l.framing(i) < 0) sign = -sign;
      total += sign * congruent_sum(split_coefficients(l, table, j), f, target);
    }
    if (j == 0) break;
  }
  if (p.b1 == 1) {
    std::size_t n = members(j0).front();
    long top = (k[n] - 1) / 2;
    Rational tail = 0;
    for (const auto& [e, c] : table.entry(Subset(1) << n).integral_terms())
      if (e[0] < top) tail += c * (top - e[0]);
    int sign = 1;
    for (std::size_t i = 0; i < m; ++i)
      if (i != n && l.framing(i) < 0) sign = -sign;
    total -= sign * as_integer(tail, "knot tail");
  }
  return total;
}

SwTable sw_split_table(const SurgeryPresentation& p, const ConwayTable& table, long radius) {
  SwTable out;
  out.radius = radius;
  if (p.b1 == 1) out.direction = p.h->render(default_direction(p));
  for (auto& k : EulerClasses(p).enumerate(radius)) {
    Integer v = sw_split_value(p, table, k);
    out.entries.push_back({k, v});
  }
  return out;
}

Rational torsion_function(const SurgeryPresentation& p, const ConwayTable& table, const std::vector<long>& k,
                          const std::optional<GroupElement>& direction) {
  QHFraction t = tau(p, table, k);
  if (p.b1 != 1) return coefficient_of_one(p, t);
  return series_coefficient(t, direction_or_default(p, direction), p.h->identity());
}

CheckReport torsion_duality_check(const SurgeryPresentation& p, const ConwayTable& table, const std::vector<long>& k,
                                  const std::optional<GroupElement>& direction) {
  std::vector<long> k2(k.size());
  for (std::size_t i = 0; i < k.size(); ++i) k2[i] = 2 - k[i];
  Rational a, b;
  if (p.b1 != 1) {
    a = torsion_function(p, table, k);
    b = torsion_function(p, table, k2);
  } else {
    GroupElement t = direction_or_default(p, direction);
    a = torsion_function(p, table, k, t);
    b = torsion_function(p, table, k2, p.h->negate(t));
  }
  if (a != b) return {"torsion_duality", false, a.get_str() + " vs " + b.get_str()};
  return {"torsion_duality", true, ""};
}

}  // namespace tsw
