#include "tsw/groupring/characters.hpp"

#include "tsw/error.hpp"

namespace tsw {

std::vector<std::string> free_variable_names(std::size_t b) {
  std::vector<std::string> v;
  for (std::size_t i = 0; i < b; ++i) v.push_back("t" + std::to_string(i + 1));
  return v;
}

std::vector<CycLaurent> character_decompose(const GroupAlgebraElement& a) {
  const GroupPtr& h = a.group();
  long n = h->torsion_exponent();
  auto vars = free_variable_names(h->free_rank());
  std::vector<CycLaurent> out;
  for (const auto& chi : h->torsion_characters()) {
    CycLaurent p(vars);
    for (const auto& [g, c] : a.terms()) {
      Cyclotomic v = Cyclotomic::root_of_unity(n, chi.value(g));
      v *= c;
      p.add(g.free, v);
    }
    out.push_back(std::move(p));
  }
  return out;
}

GroupAlgebraElement character_reassemble(const GroupPtr& h, const std::vector<CycLaurent>& components) {
  auto chars = h->torsion_characters();
  ensure(components.size() == chars.size(), ErrorKind::Assertion, "one component per character required");
  long n = h->torsion_exponent();
  Rational weight(1, h->torsion_order());
  weight.canonicalize();
  // coefficient of x^e * s at torsion element s: (1/|T|) sum_chi comp_chi[e] * chi(s)^{-1}
  std::map<std::vector<long>, std::vector<std::pair<std::size_t, Cyclotomic>>> by_exponent;
  for (std::size_t c = 0; c < chars.size(); ++c)
    for (const auto& [e, x] : components[c].doubled_terms()) by_exponent[e].emplace_back(c, x);
  GroupAlgebraElement out(h);
  auto torsion = h->torsion_elements();
  for (const auto& [e, list] : by_exponent) {
    std::vector<long> free(e);
    for (auto& x : free) {
      ensure(x % 2 == 0, ErrorKind::HalfIntegerExponent, "character component has half-integer exponents");
      x /= 2;
    }
    for (const auto& s : torsion) {
      Cyclotomic acc(n);
      for (const auto& [c, x] : list) acc += x.times_root(-chars[c].value(s));
      ensure(acc.is_rational(), ErrorKind::NonRationalReassembly,
             "reassembled coefficient is not rational: " + acc.to_string());
      out.add_term(h->from_coordinates(free, s.tors), acc.rational_value() * weight);
    }
  }
  return out;
}

std::vector<Cyclotomic> torsion_transform(const GroupAlgebraElement& a) {
  std::vector<Cyclotomic> out;
  long n = a.group()->torsion_exponent();
  for (const auto& p : character_decompose(a)) {
    ensure(p.size() <= 1, ErrorKind::Assertion, "torsion transform of a non-torsion element");
    Cyclotomic v(n);
    for (const auto& [e, x] : p.doubled_terms()) v += x;
    out.push_back(v);
  }
  return out;
}

GroupAlgebraElement inverse_torsion_transform(const GroupPtr& h, const std::vector<Cyclotomic>& values) {
  std::vector<CycLaurent> comps;
  auto vars = free_variable_names(h->free_rank());
  for (const auto& v : values) comps.push_back(CycLaurent::constant(vars, v));
  return character_reassemble(h, comps);
}

}  // namespace tsw
