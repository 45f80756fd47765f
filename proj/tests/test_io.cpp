#include "doctest.h"
#include "helpers.hpp"
#include "tsw/error.hpp"
#include "tsw/io/json_io.hpp"
#include "tsw/surgery/torsion.hpp"

using namespace tsw;
using tsw::test::framed;

namespace {

ErrorKind kind_of(const Json& j) {
  try {
    input_from_json(j);
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Assertion;
}

}  // namespace

TEST_CASE("input schema") {
  Json j = Json::parse(R"j({
    "components": ["a", "b"],
    "linking_matrix": [[0, 1], [1, 0]],
    "conway": {"1": {"type": "knot", "delta": [[0, 1]]},
               "2": {"type": "knot", "delta": [[0, 1]]},
               "1,2": {"type": "poly", "terms": [[[0, 0], 1]]}},
    "charge": [0, 2]
  })j");
  LinkInput in = input_from_json(j);
  CHECK(in.link.size() == 2);
  CHECK(in.link.lk(0, 1) == 1);
  CHECK(in.charge == std::optional<std::vector<long>>({0, 2}));
  CHECK(in.table.entry(3) == RatLaurent::constant({"t1", "t2"}, Rational(1)));
  CHECK(conway_table_validate(in.link, in.table).ok());
}

TEST_CASE("schema violations") {
  Json base = input_to_json({framed("trefoil", {0}).link, framed("trefoil", {0}).table, std::nullopt, std::nullopt});
  Json a = base;
  a.erase("linking_matrix");
  CHECK(kind_of(a) == ErrorKind::InvalidInput);
  Json b = base;
  b["conway"]["2"] = b["conway"]["1"];
  CHECK(kind_of(b) == ErrorKind::InvalidInput);
  Json c = base;
  c["pd"] = "O";
  CHECK(kind_of(c) == ErrorKind::InvalidInput);
  Json d = base;
  d["conway"]["1"]["delta"][0][1] = 1.5;
  CHECK(kind_of(d) == ErrorKind::InvalidInput);
  Json e = base;
  e["linking_matrix"] = Json::parse("[[0, 1]]");
  CHECK(kind_of(e) == ErrorKind::InvalidInput);
  CHECK(kind_of(Json::parse(R"j({"pd": "X(1,2,3)"})j")) == ErrorKind::MalformedPD);
}

TEST_CASE("PD input") {
  LinkInput in = input_from_json(Json::parse(R"j({"pd": "X(1,2,3,4) X(2,1,4,3)", "linking_matrix": [[2, 1], [1, -1]]})j"));
  CHECK(in.link.framing(0) == 2);
  CHECK(in.link.framing(1) == -1);
  CHECK(in.table.entries() == builtin_link("hopf").table.entries());
  CHECK(kind_of(Json::parse(R"j({"pd": "X(1,2,3,4) X(2,1,4,3)", "linking_matrix": [[0, 0], [0, 0]]})j")) ==
        ErrorKind::InvalidInput);
}

TEST_CASE("input round trip") {
  for (const auto& b : builtin_links()) {
    LinkInput in{b.link, b.table, std::vector<long>(parity_base(b.link)), std::nullopt};
    Json j = input_to_json(in);
    LinkInput back = input_from_json(j);
    CHECK(back.link.names() == in.link.names());
    CHECK(back.link.linking_matrix() == in.link.linking_matrix());
    CHECK(back.table.entries() == in.table.entries());
    CHECK(back.charge == in.charge);
    CHECK(input_to_json(back).dump() == j.dump());
  }
}

TEST_CASE("result round trips") {
  for (auto [name, f] : std::vector<std::pair<std::string, std::vector<long>>>{
           {"unknot", {0}}, {"unknot", {6}}, {"whitehead", {0, 2}}, {"borromean", {2, 0, 0}}}) {
    auto c = framed(name, f);
    auto p = surgered_homology(c.link);
    QHFraction t = tau(p, c.table, parity_base(c.link));
    Json j = fraction_to_json(t);
    GroupPtr g = group_from_json(group_to_json(*p.h));
    CHECK(g->same_structure(*p.h));
    QHFraction back = fraction_from_json(Json::parse(j.dump()), g);
    CHECK(back == t);
    CHECK(fraction_to_json(back).dump() == j.dump());
  }
  SwTable s;
  s.entries = {{{1, 1, 1}, Integer(-1)}, {{3, 1, 1}, Integer("123456789012345678901234567890")}};
  s.radius = 2;
  SwTable back = sw_table_from_json(sw_table_to_json(s));
  CHECK(back.entries.size() == 2);
  CHECK(back.entries[1].value == s.entries[1].value);
  CHECK(back.entries[0].charge == s.entries[0].charge);
  CHECK(sw_table_to_json(back).dump() == sw_table_to_json(s).dump());
  RatLaurent p({"x", "y"});
  p.add_doubled({1, -3}, Rational(2, 3));
  CHECK(laurent_from_json(laurent_to_json(p)) == p);
  CHECK(rational_from_json(rational_to_json(Rational(-7, 4))) == Rational(-7, 4));
}
