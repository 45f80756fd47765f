#include "doctest.h"
#include "helpers.hpp"
#include "tsw/error.hpp"
#include "tsw/surgery/checks.hpp"
#include "tsw/surgery/torsion.hpp"

using namespace tsw;
using tsw::test::framed;

TEST_CASE("surgered homology") {
  auto u0 = surgered_homology(framed("unknot", {0}).link);
  CHECK(u0.h->describe() == "Z");
  CHECK(u0.b1 == 1);
  CHECK(u0.i0 == 0);
  for (long p : {2, 5, -3}) {
    auto up = surgered_homology(framed("unknot", {p}).link);
    CHECK(up.b1 == 0);
    CHECK(up.h->torsion_order() == std::labs(p));
    CHECK(up.i0 == 1);
  }
  CHECK(surgered_homology(framed("hopf", {0, 0}).link).h->is_trivial());
  for (long f : {2, 3}) {
    auto b = surgered_homology(framed("borromean", {f, 0, 0}).link);
    CHECK(b.h->describe() == "Z^2 + Z/" + std::to_string(f));
    CHECK(b.i0 == 1);
    CHECK(b.lone_free_component() == std::nullopt);
  }
  auto w = surgered_homology(framed("whitehead", {3, 0}).link);
  CHECK(w.lone_free_component() == std::optional<std::size_t>(1));
}

TEST_CASE("Euler classes") {
  auto p = surgered_homology(framed("unknot", {5}).link);
  EulerClasses e(p);
  CHECK(e.enumerate().size() == 5);
  CHECK(e.equal({1}, {11}));
  CHECK_FALSE(e.equal({1}, {3}));
  CHECK_THROWS_AS(e.class_of({2}), Error);
  auto u0 = surgered_homology(framed("unknot", {0}).link);
  EulerClasses e0(u0);
  CHECK_THROWS_AS(e0.enumerate(), Error);
  CHECK(e0.enumerate(2).size() == 5);
  CHECK(u0.h->is_identity(e0.chern({1})));
  CHECK(e0.inverse({5}) == std::vector<long>{-3});
  CHECK(e0.boundary(2).size() == 2);
}

TEST_CASE("orientation bookkeeping") {
  CHECK(det0(IntMatrix::from_rows({{0, 1}, {1, 0}}, 2)) == -1);
  CHECK(det0(IntMatrix(2, 2)) == 1);
  CHECK(det0(IntMatrix::from_rows({{-3}}, 1)) == -1);
  CHECK(det0(IntMatrix::from_rows({{0, 0}, {0, 2}}, 2)) == 1);
  // unknot framing 0: b1 = 1, m = 1, det0 = 1
  CHECK(orientation_sign(framed("unknot", {0}).link) == -1);
  CHECK(orientation_sign(framed("unknot", {-2}).link) == -1);
}

TEST_CASE("unknot with framing zero") {
  auto c = framed("unknot", {0});
  auto p = surgered_homology(c.link);
  GroupElement t = p.meridians[0];
  for (long k : {-3, 1, 5}) {
    QHFraction expect(GroupAlgebraElement::unit(p.h, p.h->scale(t, (k + 1) / 2), -1), {t, t});
    CHECK(tau(p, c.table, {k}) == expect);
  }
}

TEST_CASE("knots with framing zero") {
  for (const char* name : {"trefoil", "figure8"}) {
    auto c = framed(name, {0});
    auto p = surgered_homology(c.link);
    GroupElement t = p.meridians[0];
    GroupAlgebraElement d = push_to_group_algebra(c.table.entry(1), p.h, {t});
    for (long k : {-1, 1, 3}) {
      QHFraction expect(d.shifted(p.h->scale(t, (k + 1) / 2)).scaled(-1), {t, t});
      CHECK(tau(p, c.table, {k}) == expect);
      QHFraction dl = delta(p, c.table, {k});
      CHECK(dl.numerator().size() == d.size());
    }
  }
}

TEST_CASE("lens spaces per character") {
  for (long n = 2; n <= 7; ++n) {
    auto c = framed("unknot", {n});
    auto p = surgered_homology(c.link);
    for (const auto& chi : p.h->torsion_characters()) {
      long r = chi.value(p.meridians[0]) % n;
      if (r == 0) continue;
      for (long k : {1, 3, -1}) {
        CycFraction got = tau_character(p, c.table, {k}, chi);
        long e = (((k + 1) / 2 * r) % n + n) % n;
        Cyclotomic d = Cyclotomic::root_of_unity(n, r) - Cyclotomic(n, Rational(1));
        Cyclotomic v = Cyclotomic::root_of_unity(n, e) * Rational(-1) * (d * d).inverse();
        CycFraction expect(n, CycLaurent::constant({}, v));
        CHECK(got == expect);
      }
    }
    CHECK(cross_check(p, c.table, {1}).ok);
  }
}

TEST_CASE("trivial character is rejected for rational homology spheres") {
  auto c = framed("unknot", {3});
  auto p = surgered_homology(c.link);
  for (const auto& chi : p.h->torsion_characters())
    if (chi.is_trivial()) CHECK_THROWS_AS(tau_character(p, c.table, {1}, chi), Error);
}

TEST_CASE("Borromean rings with framings (f,0,0)") {
  for (long f : {0, 1, -1, 2}) {
    auto c = framed("borromean", {f, 0, 0});
    auto p = surgered_homology(c.link);
    QHFraction t = tau(p, c.table, {1, 1, 1});
    REQUIRE(t.is_polynomial());
    auto poly = t.as_polynomial();
    if (f == 0) {
      CHECK(poly.size() == 1);
      CHECK(abs(poly.terms().begin()->second) == 1);
    }
    CHECK(poly.is_integral());
    CHECK(fast_path_check(p, c.table, {1, 1, 1}).ok);
  }
}

TEST_CASE("Alexander function needs b1 > 0") {
  auto c = framed("unknot", {4});
  auto p = surgered_homology(c.link);
  CHECK_THROWS_AS(delta(p, c.table, {1}), Error);
}

TEST_CASE("incomplete tables are reported") {
  auto c = framed("hopf", {1, 1});
  ConwayTable partial(2);
  partial.set_knot(0, tsw::test::one_var({{0, 1}}));
  auto p = surgered_homology(c.link);
  try {
    tau(p, partial, {0, 0});
    FAIL("expected IncompleteTable");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::IncompleteTable);
  }
}

TEST_CASE("split fast path is refused for linked components") {
  auto c = framed("hopf", {0, 1});
  auto p = surgered_homology(c.link);
  CHECK_THROWS_AS(tau_split(p, c.table, {0, 0}), Error);
}

TEST_CASE("identity checks on small examples") {
  for (auto [name, f] : std::vector<std::pair<std::string, std::vector<long>>>{
           {"hopf", {1, 2}}, {"whitehead", {0, 1}}, {"torus24", {0, 0}}, {"trefoil", {3}}, {"figure8", {0}}}) {
    auto c = framed(name, f);
    auto p = surgered_homology(c.link);
    auto k = parity_base(c.link);
    INFO(name);
    CHECK(duality_check(p, c.table, k).ok);
    CHECK(cross_check(p, c.table, k).ok);
    std::vector<long> v(k.size(), 1);
    CHECK(equivariance_check(p, c.table, k, v).ok);
    if (p.b1 > 0) CHECK(projection_check(p, c.table, k).ok);
  }
}
