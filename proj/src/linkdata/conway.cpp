#include "tsw/linkdata/conway.hpp"

#include "tsw/error.hpp"

namespace tsw {

namespace {

RatLaurent renamed(const RatLaurent& p, const std::vector<std::string>& vars) {
  ensure(p.arity() == vars.size(), ErrorKind::Assertion, "rename with wrong arity");
  RatLaurent r(vars);
  for (const auto& [e, c] : p.doubled_terms()) r.add_doubled(e, c);
  return r;
}

RatLaurent one_var_binomial(const std::vector<std::string>& vars, std::size_t pos, long power) {
  std::vector<long> e(vars.size(), 0);
  e[pos] = power;
  RatLaurent b = RatLaurent::monomial(vars, e, 1);
  b.add(std::vector<long>(vars.size(), 0), -1);
  return b;
}

std::vector<long> unit_doubled(std::size_t n, std::size_t pos, long power) {
  std::vector<long> v(n, 0);
  v[pos] = 2 * power;
  return v;
}

}  // namespace

std::vector<std::string> subset_variables(Subset s) {
  std::vector<std::string> v;
  for (std::size_t i : members(s)) v.push_back("t" + std::to_string(i + 1));
  return v;
}

void ConwayTable::set_knot(std::size_t i, const RatLaurent& delta) {
  ensure(i < m_, ErrorKind::InvalidInput, "knot entry index out of range");
  ensure(delta.arity() == 1, ErrorKind::InvalidInput, "knot entry must be a one-variable polynomial");
  entries_[Subset(1) << i] = renamed(delta, {"t"});
}

void ConwayTable::set_poly(Subset s, const RatLaurent& nabla) {
  ensure(s != 0 && (s & ~full_subset(m_)) == 0, ErrorKind::InvalidInput, "table subset out of range");
  ensure(cardinality(s) >= 2, ErrorKind::InvalidInput, "polynomial entries need at least two components");
  ensure(nabla.arity() == cardinality(s), ErrorKind::InvalidInput,
         "entry for {" + subset_key(s) + "} has the wrong number of variables");
  entries_[s] = renamed(nabla, subset_variables(s));
}

const RatLaurent& ConwayTable::entry(Subset s) const {
  auto it = entries_.find(s);
  if (it == entries_.end()) fail(ErrorKind::IncompleteTable, "Conway table has no entry for {" + subset_key(s) + "}");
  return it->second;
}

std::vector<Subset> ConwayTable::missing() const {
  std::vector<Subset> out;
  for (Subset s = 1; s <= full_subset(m_) && s != 0; ++s)
    if (!has(s)) out.push_back(s);
  return out;
}

void ConwayTable::require_complete() const {
  auto miss = missing();
  if (!miss.empty()) fail(ErrorKind::IncompleteTable, "Conway table has no entry for {" + subset_key(miss.front()) + "}");
}

void ConwayTable::set_coefficient(Subset s, const std::vector<long>& exps, const Rational& c) {
  RatLaurent& p = entries_.at(s);
  Rational old = p.coefficient(exps);
  p.add(exps, c - old);
}

RatLaurent nabla_numerator(const ConwayTable& table, Subset sub, const std::vector<long>& k_sub) {
  ensure(k_sub.size() == cardinality(sub), ErrorKind::Assertion, "charge does not match the sublink");
  auto vars = subset_variables(sub);
  const RatLaurent& e = table.entry(sub);
  if (cardinality(sub) == 1) {
    long k = k_sub[0];
    ensure((k + 1) % 2 == 0, ErrorKind::ParityMismatch, "knot charge must be odd");
    return -(renamed(e, vars).shifted_doubled({k + 1}));
  }
  RatLaurent p = -(e.half_substitution().shifted_doubled(k_sub));
  ensure(p.is_integral(), ErrorKind::ParityMismatch,
         "charge and Conway entry for {" + subset_key(sub) + "} give half-integer exponents");
  return p;
}

QHFraction nabla_relative(const FramedLink& l, const ConwayTable& table, Subset sub, Subset rel,
                          const std::vector<long>& k_sub) {
  GroupPtr h = relative_group(l, sub, rel);
  auto gens = members(sub);
  std::vector<GroupElement> assignment;
  for (std::size_t c = 0; c < gens.size(); ++c) assignment.push_back(h->generator(c));
  GroupAlgebraElement num = push_to_group_algebra(nabla_numerator(table, sub, k_sub), h, assignment);
  std::vector<GroupElement> den;
  for (std::size_t c = 0; c < gens.size(); ++c)
    if (contains(rel, gens[c])) den.push_back(assignment[c]);
  if (gens.size() == 1) den.push_back(assignment[0]);
  QHFraction x = QHFraction(num, den).normalized();
  if (h->free_rank() >= 2)
    ensure(x.is_polynomial(), ErrorKind::NotDivisible,
           "relative Conway term for {" + subset_key(sub) + "} rel {" + subset_key(rel) + "} is not a polynomial");
  return x;
}

RatLaurent nabla_check(const FramedLink& l, const ConwayTable& table, Subset sub, const std::vector<long>& k_sub) {
  ensure(cardinality(sub) >= 2, ErrorKind::Assertion, "nabla_check needs at least two components");
  for (std::size_t i : members(sub))
    for (std::size_t j : members(sub))
      if (i != j && l.lk(i, j) != 0) fail(ErrorKind::NotSplit, "sublink {" + subset_key(sub) + "} is not algebraically split");
  RatLaurent p = nabla_numerator(table, sub, k_sub);
  for (std::size_t c = 0; c < p.arity(); ++c) p = divide_binomial(p, unit_doubled(p.arity(), c, 1), Rational(1));
  return p;
}

RatLaurent split_coefficients(const FramedLink& l, const ConwayTable& table, Subset sub) {
  ensure(cardinality(sub) >= 2, ErrorKind::Assertion, "split coefficients need at least two components");
  for (std::size_t i : members(sub))
    for (std::size_t j : members(sub))
      if (i != j && l.lk(i, j) != 0) fail(ErrorKind::NotSplit, "sublink {" + subset_key(sub) + "} is not algebraically split");
  RatLaurent p = table.entry(sub);
  for (std::size_t c = 0; c < p.arity(); ++c) p = divide_binomial(p, unit_doubled(p.arity(), c, 2), Rational(1));
  return p;
}

TorresResult torres_check(const FramedLink& l, const ConwayTable& table, Subset sub, std::size_t i,
                          const std::vector<long>& k_sub) {
  TorresResult r;
  auto gens = members(sub);
  std::size_t pos = 0;
  while (pos < gens.size() && gens[pos] != i) ++pos;
  ensure(pos < gens.size() && gens.size() >= 2, ErrorKind::Assertion, "Torres check needs i in a sublink of size >= 2");
  Subset rest = sub & ~(Subset(1) << i);
  auto rest_vars = subset_variables(rest);
  RatLaurent lhs = nabla_numerator(table, sub, k_sub).set_to_one(pos);
  auto k_rest = restrict_charge_within(l, sub, k_sub, rest);
  RatLaurent rhs = nabla_numerator(table, rest, k_rest);
  std::vector<long> e(rest_vars.size(), 0);
  std::size_t c = 0;
  for (std::size_t j : gens)
    if (j != i) e[c++] = l.lk(i, j);
  RatLaurent factor = RatLaurent::monomial(rest_vars, e, 1);
  factor.add(std::vector<long>(rest_vars.size(), 0), -1);
  rhs = factor * rhs;
  if (rest_vars.size() == 1) lhs = lhs * one_var_binomial(rest_vars, 0, 1);
  if (!(lhs == rhs)) {
    r.ok = false;
    r.detail = "Torres identity fails for {" + subset_key(sub) + "} at component " + std::to_string(i + 1) + ": " +
               lhs.to_string() + " vs " + rhs.to_string();
  }
  return r;
}

ValidationReport conway_table_validate(const FramedLink& l, const ConwayTable& table) {
  ValidationReport rep;
  std::size_t m = l.size();
  if (table.size() != m) {
    rep.failures.push_back("table size does not match the link");
    return rep;
  }
  for (Subset s : table.missing()) rep.failures.push_back("incomplete: no entry for {" + subset_key(s) + "}");
  auto k0 = parity_base(l);
  for (const auto& [s, p] : table.entries()) {
    std::string key = "{" + subset_key(s) + "}";
    if (!p.is_integral()) {
      rep.failures.push_back(key + ": non-integral exponents");
      continue;
    }
    if (cardinality(s) == 1) {
      if (p.value_at_one() != 1) rep.failures.push_back(key + ": knot normalization Delta(1) = 1 fails");
      if (!(p.bar() == p)) rep.failures.push_back(key + ": Delta(t^-1) != Delta(t)");
    } else {
      RatLaurent expect = cardinality(s) % 2 == 0 ? p : -p;
      if (!(p.bar() == expect)) rep.failures.push_back(key + ": bar symmetry fails");
    }
  }
  for (const auto& [s, p] : table.entries()) {
    if (cardinality(s) < 2) continue;
    std::string key = "{" + subset_key(s) + "}";
    auto ks = restrict_charge(l, k0, s);
    try {
      nabla_numerator(table, s, ks);
    } catch (const Error& e) {
      rep.failures.push_back(key + ": " + e.what());
      continue;
    }
    for (std::size_t i : members(s)) {
      Subset rest = s & ~(Subset(1) << i);
      if (!table.has(rest)) continue;
      try {
        TorresResult t = torres_check(l, table, s, i, ks);
        if (!t.ok) rep.failures.push_back(t.detail);
      } catch (const Error& e) {
        rep.failures.push_back(key + ": " + e.what());
      }
    }
  }
  for (Subset s : table.sign_ambiguous())
    rep.notes.push_back("{" + subset_key(s) + "}: overall sign not fixed by Torres descent or the skein relation");
  return rep;
}

}  // namespace tsw
