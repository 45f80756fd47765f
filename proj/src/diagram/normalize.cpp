#include <algorithm>

#include "tsw/diagram/diagram.hpp"
#include "tsw/error.hpp"

namespace tsw {

namespace {

const std::vector<std::string> kT{"t"};

// Shift so that every variable's exponent range is centred on zero.
RatLaurent balanced(const RatLaurent& p) {
  if (p.is_zero()) return p;
  auto [lo, hi] = p.doubled_extent();
  std::vector<long> shift(p.arity());
  for (std::size_t i = 0; i < shift.size(); ++i) shift[i] = -(lo[i] + hi[i]) / 2;
  return p.shifted_doubled(shift);
}

// sum c_j (t - 1/t)^j
RatLaurent at_t_minus_inverse(const RatLaurent& skein) {
  RatLaurent base = RatLaurent::monomial(kT, {1}, Rational(1)) - RatLaurent::monomial(kT, {-1}, Rational(1));
  RatLaurent out(kT);
  for (const auto& [e, c] : skein.integral_terms()) {
    ensure(e[0] >= 0, ErrorKind::Assertion, "skein polynomial with a negative power");
    RatLaurent term = RatLaurent::constant(kT, c);
    for (long j = 0; j < e[0]; ++j) term = term * base;
    out += term;
  }
  return out;
}

RatLaurent normalized_knot(const RatLaurent& raw, std::size_t i) {
  std::string where = "component " + std::to_string(i + 1);
  ensure(!raw.is_zero(), ErrorKind::TorresInconsistent, "zero Alexander polynomial for " + where);
  RatLaurent p = balanced(raw);
  ensure(p.is_integral() && p.bar() == p, ErrorKind::TorresInconsistent,
         "Alexander polynomial of " + where + " is not symmetric");
  Rational v = p.value_at_one();
  ensure(v == 1 || v == -1, ErrorKind::TorresInconsistent, "Alexander polynomial of " + where + " has |Delta(1)| != 1");
  return v == 1 ? p : -p;
}

}  // namespace

ConwayTable normalize_alexander(const FramedLink& l, const std::map<Subset, RatLaurent>& raw,
                                const std::map<Subset, RatLaurent>& skein) {
  std::size_t m = l.size();
  ConwayTable table(m);
  auto k0 = parity_base(l);
  std::vector<Subset> order;
  for (Subset s = 1; s <= full_subset(m) && s != 0; ++s) order.push_back(s);
  std::stable_sort(order.begin(), order.end(), [](Subset a, Subset b) { return cardinality(a) < cardinality(b); });

  for (Subset s : order) {
    auto it = raw.find(s);
    ensure(it != raw.end(), ErrorKind::IncompleteTable, "no Alexander data for {" + subset_key(s) + "}");
    std::string key = "{" + subset_key(s) + "}";
    if (cardinality(s) == 1) {
      table.set_knot(members(s)[0], normalized_knot(it->second, members(s)[0]));
      continue;
    }
    RatLaurent b = balanced(it->second.square_substitution());
    RatLaurent mirror = cardinality(s) % 2 == 0 ? b : -b;
    ensure(b.is_integral() && b.bar() == mirror, ErrorKind::TorresInconsistent, key + ": Alexander data is not symmetric");

    auto ks = restrict_charge(l, k0, s);
    int decided = 0;
    for (std::size_t i : members(s)) {
      bool ok[2];
      for (int side = 0; side < 2; ++side) {
        ConwayTable trial = table;
        trial.set_poly(s, side == 0 ? b : -b);
        ok[side] = torres_check(l, trial, s, i, ks).ok;
      }
      if (!ok[0] && !ok[1]) fail(ErrorKind::TorresInconsistent, key + ": no sign satisfies Torres at component " + std::to_string(i + 1));
      int here = ok[0] == ok[1] ? 0 : (ok[0] ? 1 : -1);
      if (here != 0 && decided != 0 && here != decided)
        fail(ErrorKind::TorresInconsistent, key + ": Torres identities disagree on the sign");
      if (here != 0) decided = here;
    }

    auto sk = skein.find(s);
    if (sk != skein.end()) {
      RatLaurent lhs = b.diagonal("t") *
                       (RatLaurent::monomial(kT, {1}, Rational(1)) - RatLaurent::monomial(kT, {-1}, Rational(1)));
      RatLaurent rhs = at_t_minus_inverse(sk->second);
      int from_skein = 0;
      if (!rhs.is_zero()) {
        if (lhs == rhs) from_skein = 1;
        else if (lhs == -rhs) from_skein = -1;
        else fail(ErrorKind::TorresInconsistent, key + ": skein polynomial does not match the Alexander data");
      } else if (!lhs.is_zero()) {
        fail(ErrorKind::TorresInconsistent, key + ": skein polynomial vanishes but the Alexander data does not");
      }
      if (decided != 0 && from_skein != 0 && decided != from_skein)
        fail(ErrorKind::TorresInconsistent, key + ": Torres and skein signs disagree");
      if (decided == 0) decided = from_skein;
    }
    table.set_poly(s, decided < 0 ? -b : b);
    if (decided == 0 && !b.is_zero()) table.mark_sign_ambiguous(s);
  }
  return table;
}

NormalizedLink normalize_to_table(const Diagram& d) {
  std::size_t m = d.size();
  std::vector<std::string> names;
  for (std::size_t i = 0; i < m; ++i) names.push_back("L" + std::to_string(i + 1));
  FramedLink l(names, d.linking_matrix());
  std::map<Subset, RatLaurent> raw, skein;
  for (Subset s = 1; s <= full_subset(m) && s != 0; ++s) {
    Diagram sd = sub_diagram(d, s);
    raw.emplace(s, fox_alexander(sd));
    if (cardinality(s) < 2) continue;
    try {
      skein.emplace(s, skein_conway(sd));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::ResourceLimit) throw;
    }
  }
  return {l, normalize_alexander(l, raw, skein)};
}

}  // namespace tsw
