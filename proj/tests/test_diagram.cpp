#include "doctest.h"
#include "helpers.hpp"
#include "tsw/error.hpp"

using namespace tsw;
using tsw::test::one_var;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Assertion;
}

// sum c_j (t^{1/2} - t^{-1/2})^j on the doubled lattice
RatLaurent skein_at_half(const RatLaurent& skein) {
  RatLaurent base({"t"});
  base.add_doubled({1}, 1);
  base.add_doubled({-1}, -1);
  RatLaurent out({"t"});
  for (const auto& [e, c] : skein.integral_terms()) {
    RatLaurent term = RatLaurent::constant({"t"}, c);
    for (long j = 0; j < e[0]; ++j) term = term * base;
    out += term;
  }
  return out;
}

}  // namespace

TEST_CASE("parsing PD codes") {
  Diagram t = parse_pd("X(1,2,3,4) X(2,5,6,3) X(5,1,4,6)");
  CHECK(t.crossings.size() == 3);
  CHECK(t.size() == 1);
  Diagram h = parse_pd("PD[X[1,2,3,4], X[2,1,4,3]]");
  CHECK(h.crossings.size() == 2);
  CHECK(h.size() == 2);
  CHECK(h.linking_number(0, 1) == 1);
  CHECK(parse_pd("O").size() == 1);
  CHECK(parse_pd("O O").size() == 2);
  CHECK(to_pd(parse_pd(to_pd(t))) == to_pd(t));
}

TEST_CASE("malformed PD codes") {
  CHECK(kind_of([] { parse_pd("X(1,2,3,4) X(2,1,4,3) X(1,5,6,5)"); }) == ErrorKind::MalformedPD);
  CHECK(kind_of([] { parse_pd("X(1,2,3)"); }) == ErrorKind::MalformedPD);
  CHECK(kind_of([] { parse_pd("Y(1,2,3,4)"); }) == ErrorKind::MalformedPD);
  CHECK(kind_of([] { parse_pd(""); }) == ErrorKind::MalformedPD);
  CHECK(kind_of([] { parse_pd("X(1,2,3,4)"); }) == ErrorKind::MalformedPD);
  try {
    parse_pd("X(1,2,3,4) X(2,1,4,3) junk");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("offset") != std::string::npos);
  }
}

TEST_CASE("orientation follows the under strands") {
  Diagram h = parse_pd("X(1,2,3,4) X(2,1,4,3)");
  for (const auto& x : h.crossings) CHECK(x.sign() == 1);
  Diagram m = parse_pd("X(2,3,1,4) X(4,1,3,2)");
  CHECK(m.linking_number(0, 1) == -1);
}

TEST_CASE("Fox calculus") {
  CHECK(fox_alexander(parse_pd("O")) == one_var({{0, 1}}, "t1"));
  RatLaurent tr = fox_alexander(parse_pd(builtin_link("trefoil").pd));
  // t^2 - t + 1 up to a unit
  auto [lo, hi] = tr.doubled_extent();
  CHECK(hi[0] - lo[0] == 4);
  CHECK(abs(tr.value_at_one()) == 1);
  RatLaurent hopf = fox_alexander(parse_pd(builtin_link("hopf").pd));
  CHECK(hopf.size() == 1);
  CHECK(fox_alexander(parse_pd("X(1,2,3,4) X(2,1,4,3) O")).is_zero());
}

TEST_CASE("skein oracle") {
  RatLaurent one = RatLaurent::constant({"z"}, Rational(1));
  CHECK(skein_conway(parse_pd("O")) == one);
  CHECK(skein_conway(parse_pd(builtin_link("hopf").pd)) == RatLaurent::monomial({"z"}, {1}, Rational(1)));
  CHECK(skein_conway(parse_pd(builtin_link("trefoil").pd)) == one + RatLaurent::monomial({"z"}, {2}, Rational(1)));
  CHECK(skein_conway(parse_pd(builtin_link("figure8").pd)) == one - RatLaurent::monomial({"z"}, {2}, Rational(1)));
  CHECK(skein_conway(parse_pd("O O")).is_zero());
  CHECK(kind_of([] { skein_conway(parse_pd(builtin_link("borromean").pd), 3); }) == ErrorKind::ResourceLimit);
}

TEST_CASE("skein and Alexander agree on knots") {
  for (const auto& b : builtin_links()) {
    if (b.link.size() != 1) continue;
    INFO(b.name);
    RatLaurent d = b.table.entry(1);
    CHECK(skein_at_half(skein_conway(parse_pd(b.pd))) == d);
    RatLaurent raw = fox_alexander(parse_pd(b.pd));
    CHECK(abs(raw.value_at_one()) == 1);
  }
}

TEST_CASE("sublink diagrams") {
  Diagram b = parse_pd(builtin_link("borromean").pd);
  Diagram two = sub_diagram(b, 0b011);
  CHECK(two.size() == 2);
  CHECK(skein_conway(two).is_zero());
  Diagram one = sub_diagram(b, 0b100);
  CHECK(one.size() == 1);
  CHECK(fox_alexander(one) == one_var({{0, 1}}, "t1"));
  Diagram w = parse_pd(builtin_link("whitehead").pd);
  CHECK(sub_diagram(w, 0b01).size() == 1);
}

TEST_CASE("builtin library") {
  CHECK(builtin_links().size() == 7);
  CHECK_THROWS_AS(builtin_link("nope"), Error);
  for (const auto& b : builtin_links()) {
    INFO(b.name);
    NormalizedLink n = normalize_to_table(parse_pd(b.pd));
    CHECK(n.link.linking_matrix() == b.link.linking_matrix());
    CHECK(n.table.entries() == b.table.entries());
    CHECK(n.table.sign_ambiguous().empty());
    CHECK(conway_table_validate(b.link, b.table).ok());
  }
  CHECK(builtin_link("trefoil").table.entry(1).value_at_one() == 1);
  CHECK(builtin_link("whitehead").link.lk(0, 1) == 0);
}

TEST_CASE("normalization from raw data") {
  FramedLink hopf({"a", "b"}, IntMatrix::from_rows({{0, 1}, {1, 0}}, 2));
  std::map<Subset, RatLaurent> raw;
  raw.emplace(1, one_var({{3, 1}}, "t1"));  // a unit times Delta = 1
  raw.emplace(2, one_var({{0, -1}}, "t2"));
  RatLaurent h({"t1", "t2"});
  h.add({2, -1}, -1);
  raw.emplace(3, h);
  ConwayTable t = normalize_alexander(hopf, raw);
  CHECK(t.entry(1) == one_var({{0, 1}}));
  CHECK(t.entry(3) == RatLaurent::constant({"t1", "t2"}, Rational(1)));
  CHECK(t.sign_ambiguous().empty());
  // Whitehead data without a skein polynomial: Torres cannot fix the sign
  FramedLink w({"a", "b"}, IntMatrix(2, 2));
  std::map<Subset, RatLaurent> wr{{1, one_var({{0, 1}}, "t1")}, {2, one_var({{0, 1}}, "t2")}};
  RatLaurent a({"t1", "t2"});
  a.add({0, 0}, 1);
  a.add({1, 0}, -1);
  a.add({0, 1}, -1);
  a.add({1, 1}, 1);
  wr.emplace(3, a);
  ConwayTable wt = normalize_alexander(w, wr);
  CHECK(wt.sign_ambiguous() == std::vector<Subset>{3});
  // a knot polynomial with |Delta(1)| != 1 is rejected
  std::map<Subset, RatLaurent> badk{{1, one_var({{0, 3}}, "t1")}};
  FramedLink k1({"k"}, IntMatrix(1, 1));
  CHECK(kind_of([&] { normalize_alexander(k1, badk); }) == ErrorKind::TorresInconsistent);
}
