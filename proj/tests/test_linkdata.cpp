#include "doctest.h"
#include "helpers.hpp"
#include "tsw/error.hpp"

using namespace tsw;
using tsw::test::framed;

TEST_CASE("subsets") {
  CHECK(members(0b1011) == std::vector<std::size_t>{0, 1, 3});
  CHECK(subset_key(0b101) == "1,3");
  CHECK(parse_subset_key("3,1", 3) == 0b101);
  CHECK_THROWS_AS(parse_subset_key("4", 3), Error);
  CHECK_THROWS_AS(parse_subset_key("1,1", 3), Error);
  CHECK(full_subset(3) == 7);
}

TEST_CASE("framed links and charges") {
  CHECK_THROWS_AS(FramedLink({"a", "b"}, IntMatrix::from_rows({{0, 1}, {2, 0}}, 2)), Error);
  auto hopf = framed("hopf", {2, 3}).link;
  CHECK(parity_base(hopf) == std::vector<long>{0, 0});
  CHECK(parity_base(framed("unknot", {0}).link) == std::vector<long>{1});
  CHECK_THROWS_AS(validate_charge(hopf, {1, 0}), Error);
  CHECK(validate_charge(hopf, {2, -4}) == std::vector<long>{2, -4});
  // k^I drops the linking with the complement
  CHECK(restrict_charge(hopf, {2, 4}, 0b01) == std::vector<long>{1});
  // Hopf framings (a, b), I = {1}: l = [a + 1]
  auto ls = linking_submatrix(hopf, 0b01);
  CHECK(ls.determinant == 3);
  CHECK(linking_submatrix(hopf, 0b11).determinant == 5);
  auto g = relative_group(framed("torus24", {0, 0}).link, 0b11, 0b01);
  CHECK(g->describe() == "Z + Z/2");
}

TEST_CASE("conway table access") {
  ConwayTable t(2);
  CHECK(t.missing().size() == 3);
  CHECK_THROWS_AS(t.entry(1), Error);
  t.set_knot(0, tsw::test::one_var({{0, 1}}));
  CHECK_THROWS_AS(t.set_poly(3, tsw::test::one_var({{0, 1}})), Error);
  CHECK_THROWS_AS(t.require_complete(), Error);
}

TEST_CASE("builtin tables validate") {
  for (const auto& b : builtin_links()) {
    auto rep = conway_table_validate(b.link, b.table);
    INFO(b.name);
    CHECK(rep.ok());
  }
}

TEST_CASE("nabla normalization") {
  auto u = framed("unknot", {0});
  // knot: -t^{(k+1)/2} Delta
  CHECK(nabla_numerator(u.table, 1, {1}) == tsw::test::one_var({{1, -1}}, "t1"));
  auto h = framed("hopf", {0, 0});
  RatLaurent n = nabla_numerator(h.table, 3, {0, 0});
  CHECK(n.size() == 1);
  CHECK_THROWS_AS(nabla_numerator(h.table, 3, {1, 0}), Error);
  auto w = framed("whitehead", {0, 0});
  CHECK(split_coefficients(w.link, w.table, 3).size() == 1);
  CHECK_THROWS_AS(split_coefficients(h.link, h.table, 3), Error);
}

TEST_CASE("Torres identity on the Hopf link") {
  auto h = framed("hopf", {0, 0});
  for (std::size_t i : {0, 1}) CHECK(torres_check(h.link, h.table, 3, i, {0, 0}).ok);
  ConwayTable bad = h.table;
  bad.set_poly(3, -bad.entry(3));
  CHECK_FALSE(torres_check(h.link, bad, 3, 0, {0, 0}).ok);
}

TEST_CASE("validation catches broken tables") {
  auto t = framed("trefoil", {0});
  ConwayTable bad = t.table;
  bad.set_coefficient(1, {0}, 2);
  CHECK_FALSE(conway_table_validate(t.link, bad).ok());
  auto b = framed("borromean", {0, 0, 0});
  ConwayTable asym = b.table;
  asym.set_coefficient(7, {1, 1, 1}, 3);
  CHECK_FALSE(conway_table_validate(b.link, asym).ok());
  ConwayTable partial(3);
  CHECK_FALSE(conway_table_validate(b.link, partial).ok());
}
