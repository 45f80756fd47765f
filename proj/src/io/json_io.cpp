#include "tsw/io/json_io.hpp"

#include <fstream>

#include "tsw/diagram/diagram.hpp"
#include "tsw/error.hpp"

namespace tsw {

namespace {

const Json& need(const Json& j, const char* key) {
  ensure(j.is_object() && j.contains(key), ErrorKind::InvalidInput, std::string("missing field '") + key + "'");
  return j.at(key);
}

long integer_of(const Json& j, const std::string& what) {
  ensure(j.is_number_integer(), ErrorKind::InvalidInput, what + " must be an integer");
  return j.get<long>();
}

std::vector<long> integers_of(const Json& j, const std::string& what) {
  ensure(j.is_array(), ErrorKind::InvalidInput, what + " must be an array of integers");
  std::vector<long> v;
  for (const auto& x : j) v.push_back(integer_of(x, what));
  return v;
}

RatLaurent entry_from_json(const Json& e, Subset s, const std::string& key) {
  ensure(e.is_object(), ErrorKind::InvalidInput, "conway entry '" + key + "' must be an object");
  std::string type = need(e, "type").get<std::string>();
  std::size_t n = cardinality(s);
  if (type == "knot") {
    ensure(n == 1, ErrorKind::InvalidInput, "knot entry '" + key + "' needs a one-element subset");
    RatLaurent p(std::vector<std::string>{"t"});
    for (const auto& t : need(e, "delta")) {
      ensure(t.is_array() && t.size() == 2, ErrorKind::InvalidInput, "delta terms are [exp, coeff] in '" + key + "'");
      p.add({integer_of(t[0], "exponent")}, rational_from_json(t[1]));
    }
    return p;
  }
  ensure(type == "poly", ErrorKind::InvalidInput, "unknown entry type '" + type + "' in '" + key + "'");
  ensure(n >= 2, ErrorKind::InvalidInput, "poly entry '" + key + "' needs at least two components");
  RatLaurent p(subset_variables(s));
  for (const auto& t : need(e, "terms")) {
    ensure(t.is_array() && t.size() == 2, ErrorKind::InvalidInput, "poly terms are [[exps], coeff] in '" + key + "'");
    auto exps = integers_of(t[0], "exponent");
    ensure(exps.size() == n, ErrorKind::InvalidInput, "term in '" + key + "' has the wrong number of exponents");
    p.add(exps, rational_from_json(t[1]));
  }
  return p;
}

Json entry_to_json(const RatLaurent& p, Subset s) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.integral_terms()) {
    if (cardinality(s) == 1) terms.push_back(Json::array({e[0], rational_to_json(c)}));
    else terms.push_back(Json::array({e, rational_to_json(c)}));
  }
  if (cardinality(s) == 1) return {{"type", "knot"}, {"delta", terms}};
  return {{"type", "poly"}, {"terms", terms}};
}

IntMatrix matrix_from_json(const Json& j, std::size_t m) {
  ensure(j.is_array() && j.size() == m, ErrorKind::InvalidInput, "linking_matrix must be " + std::to_string(m) + "x" +
                                                                     std::to_string(m));
  std::vector<std::vector<long>> rows;
  for (const auto& r : j) {
    rows.push_back(integers_of(r, "linking_matrix entry"));
    ensure(rows.back().size() == m, ErrorKind::InvalidInput, "linking_matrix row has the wrong length");
  }
  return IntMatrix::from_rows(rows, m);
}

Json matrix_to_json(const IntMatrix& a) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < a.rows(); ++r) rows.push_back(a.row(r));
  return rows;
}

LinkInput from_diagram(const Json& j) {
  Diagram d = parse_pd(need(j, "pd").get<std::string>());
  NormalizedLink nl = normalize_to_table(d);
  std::size_t m = d.size();
  std::vector<std::string> names = nl.link.names();
  if (j.contains("components")) {
    names = j.at("components").get<std::vector<std::string>>();
    ensure(names.size() == m, ErrorKind::InvalidInput,
           "PD code has " + std::to_string(m) + " components but " + std::to_string(names.size()) + " are named");
  }
  IntMatrix a = nl.link.linking_matrix();
  if (j.contains("linking_matrix")) {
    IntMatrix given = matrix_from_json(j.at("linking_matrix"), m);
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < m; ++c)
        if (r != c && given(r, c) != a(r, c))
          fail(ErrorKind::InvalidInput, "linking_matrix disagrees with the PD code at (" + std::to_string(r + 1) + "," +
                                            std::to_string(c + 1) + ")");
    for (std::size_t r = 0; r < m; ++r) a(r, r) = given(r, r);
  }
  return {FramedLink(names, a), nl.table, std::nullopt, need(j, "pd").get<std::string>()};
}

}  // namespace

Json rational_to_json(const Rational& r) {
  if (r.get_den() == 1 && r.get_num().fits_slong_p()) return r.get_num().get_si();
  return r.get_str();
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  ensure(j.is_string(), ErrorKind::InvalidInput, "coefficients are integers or \"p/q\" strings");
  return parse_rational(j.get<std::string>());
}

LinkInput input_from_json(const Json& j) {
  ensure(j.is_object(), ErrorKind::InvalidInput, "input must be a JSON object");
  try {
    bool has_pd = j.contains("pd"), has_table = j.contains("conway");
    ensure(has_pd != has_table, ErrorKind::InvalidInput, "input needs exactly one of 'conway' and 'pd'");
    LinkInput in = has_pd ? from_diagram(j) : [&] {
      auto names = need(j, "components").get<std::vector<std::string>>();
      FramedLink l(names, matrix_from_json(need(j, "linking_matrix"), names.size()));
      ConwayTable t(l.size());
      const Json& c = j.at("conway");
      ensure(c.is_object(), ErrorKind::InvalidInput, "'conway' must be an object keyed by subsets");
      for (const auto& [key, e] : c.items()) {
        Subset s = parse_subset_key(key, l.size());
        ensure(!t.has(s), ErrorKind::InvalidInput, "duplicate conway entry for '" + key + "'");
        RatLaurent p = entry_from_json(e, s, key);
        if (cardinality(s) == 1) t.set_knot(members(s)[0], p);
        else t.set_poly(s, p);
      }
      return LinkInput{l, t, std::nullopt, std::nullopt};
    }();
    if (has_table && j.contains("sign_ambiguous"))
      for (const auto& key : j.at("sign_ambiguous"))
        in.table.mark_sign_ambiguous(parse_subset_key(key.get<std::string>(), in.link.size()));
    if (j.contains("charge")) in.charge = integers_of(j.at("charge"), "charge");
    return in;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::InvalidInput, std::string("bad input: ") + e.what());
  }
}

LinkInput load_input(const std::string& path) {
  std::ifstream f(path);
  ensure(f.good(), ErrorKind::InvalidInput, "cannot read '" + path + "'");
  Json j;
  try {
    j = Json::parse(f);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::InvalidInput, path + ": " + e.what());
  }
  return input_from_json(j);
}

Json input_to_json(const LinkInput& in) {
  Json j;
  j["components"] = in.link.names();
  j["linking_matrix"] = matrix_to_json(in.link.linking_matrix());
  Json c = Json::object();
  for (const auto& [s, p] : in.table.entries()) c[subset_key(s)] = entry_to_json(p, s);
  j["conway"] = c;
  if (!in.table.sign_ambiguous().empty()) {
    Json a = Json::array();
    for (Subset s : in.table.sign_ambiguous()) a.push_back(subset_key(s));
    j["sign_ambiguous"] = a;
  }
  if (in.charge) j["charge"] = *in.charge;
  if (in.pd) j["source_pd"] = *in.pd;
  return j;
}

Json laurent_to_json(const RatLaurent& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.doubled_terms()) terms.push_back(Json::array({e, rational_to_json(c)}));
  return {{"variables", p.variables()}, {"doubled_terms", terms}};
}

RatLaurent laurent_from_json(const Json& j) {
  RatLaurent p(need(j, "variables").get<std::vector<std::string>>());
  for (const auto& t : need(j, "doubled_terms")) {
    ensure(t.is_array() && t.size() == 2, ErrorKind::InvalidInput, "terms are [[exps], coeff]");
    p.add_doubled(integers_of(t[0], "exponent"), rational_from_json(t[1]));
  }
  return p;
}

Json group_to_json(const FgAbelianGroup& g) {
  return {{"description", g.describe()},
          {"free_rank", g.free_rank()},
          {"invariants", g.invariant_factors()},
          {"relations", matrix_to_json(g.relations())},
          {"generators", g.generator_count()}};
}

GroupPtr group_from_json(const Json& j) {
  std::size_t n = need(j, "generators").get<std::size_t>();
  std::vector<std::vector<long>> rows;
  for (const auto& r : need(j, "relations")) rows.push_back(integers_of(r, "relation"));
  return std::make_shared<FgAbelianGroup>(FgAbelianGroup::from_relations(IntMatrix::from_rows(rows, n)));
}

Json element_to_json(const GroupElement& g) { return {{"free", g.free}, {"tors", g.tors}}; }

GroupElement element_from_json(const Json& j) {
  return {integers_of(need(j, "free"), "free coordinate"), integers_of(need(j, "tors"), "torsion coordinate")};
}

Json algebra_to_json(const GroupAlgebraElement& a) {
  Json terms = Json::array();
  for (const auto& [g, c] : a.terms()) terms.push_back(Json::array({element_to_json(g), rational_to_json(c)}));
  return terms;
}

GroupAlgebraElement algebra_from_json(const Json& j, const GroupPtr& h) {
  GroupAlgebraElement a(h);
  ensure(j.is_array(), ErrorKind::InvalidInput, "group algebra element must be an array of [element, coeff]");
  for (const auto& t : j) a.add_term(h->reduce(element_from_json(t.at(0))), rational_from_json(t.at(1)));
  return a;
}

Json fraction_to_json(const QHFraction& x) {
  Json den = Json::array();
  for (const auto& g : x.denominator()) den.push_back(element_to_json(g));
  return {{"numerator", algebra_to_json(x.numerator())}, {"denominator", den}, {"text", x.to_string()}};
}

QHFraction fraction_from_json(const Json& j, const GroupPtr& h) {
  std::vector<GroupElement> den;
  for (const auto& g : need(j, "denominator")) den.push_back(h->reduce(element_from_json(g)));
  return QHFraction(algebra_from_json(need(j, "numerator"), h), den);
}

Json sw_table_to_json(const SwTable& t) {
  Json entries = Json::array();
  for (const auto& e : t.entries) entries.push_back({{"charge", e.charge}, {"value", rational_to_json(Rational(e.value))}});
  return {{"entries", entries},
          {"direction", t.direction},
          {"radius", t.radius},
          {"global_sign_undetermined", t.global_sign_undetermined},
          {"support_size", t.support_size()}};
}

SwTable sw_table_from_json(const Json& j) {
  SwTable t;
  for (const auto& e : need(j, "entries")) {
    Rational v = rational_from_json(need(e, "value"));
    ensure(v.get_den() == 1, ErrorKind::InvalidInput, "SW values are integers");
    t.entries.push_back({integers_of(need(e, "charge"), "charge"), v.get_num()});
  }
  t.direction = need(j, "direction").get<std::string>();
  t.radius = integer_of(need(j, "radius"), "radius");
  t.global_sign_undetermined = need(j, "global_sign_undetermined").get<bool>();
  return t;
}

}  // namespace tsw
