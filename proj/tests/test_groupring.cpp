#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "tsw/error.hpp"
#include "tsw/groupring/characters.hpp"
#include "tsw/groupring/field_element.hpp"
#include "tsw/groupring/series.hpp"

using namespace tsw;
using tsw::test::one_var;

namespace {

GroupPtr group_of(const std::vector<std::vector<long>>& rows, std::size_t n) {
  return std::make_shared<FgAbelianGroup>(FgAbelianGroup::from_relations(IntMatrix::from_rows(rows, n)));
}

}  // namespace

TEST_CASE("laurent polynomials") {
  RatLaurent p = one_var({{1, 1}, {0, -1}, {-1, 1}});
  CHECK(p.bar() == p);
  CHECK(p.value_at_one() == 1);
  RatLaurent q = one_var({{2, 1}, {0, -1}});
  // (t^2 - 1) / (t - 1) = t + 1
  CHECK(divide_binomial(q, {2}, Rational(1)) == one_var({{1, 1}, {0, 1}}));
  CHECK_THROWS_AS(divide_binomial(p, {2}, Rational(1)), Error);
  CHECK(q.half_substitution() == one_var({{1, 1}, {0, -1}}));
  CHECK_FALSE(one_var({{1, 1}}).half_substitution().is_integral());
  CHECK(q.half_substitution().square_substitution() == q);
  RatLaurent two({"a", "b"});
  two.add({1, -1}, 2);
  CHECK(two.diagonal("t") == one_var({{0, 2}}));
  CHECK(two.set_to_one(0).variables() == std::vector<std::string>{"b"});
}

TEST_CASE("group algebra") {
  auto h = group_of({{5}}, 1);
  GroupElement t = h->generator(0);
  auto b = GroupAlgebraElement::binomial(h, t);
  // (t - 1) * reduced inverse = 1 - average
  auto r = reduced_inverse_of_binomial(h, t);
  auto avg = average(h, h->torsion_elements());
  CHECK(b * r == GroupAlgebraElement::scalar(h, 1) - avg);
  CHECK(reduced_inverse(b) == r);
  CHECK(geometric_sum(h, t, 5) == avg.scaled(5));
  CHECK((b * b).bar() == (b * b).shifted(h->scale(t, -2)));

  auto z = group_of({{0}}, 1);
  GroupElement u = z->generator(0);
  auto x = GroupAlgebraElement::binomial(z, z->scale(u, 3));
  CHECK(exact_divide(x, u) == geometric_sum(z, u, 3));
  CHECK_FALSE(try_exact_divide(geometric_sum(z, u, 3), u).has_value());
}

TEST_CASE("fractions normalize and compare by cross-multiplication") {
  auto z = group_of({{0}}, 1);
  GroupElement t = z->generator(0);
  QHFraction a(GroupAlgebraElement::binomial(z, t), {t, t});
  CHECK(a.normalized().denominator().size() == 1);
  QHFraction b(GroupAlgebraElement::scalar(z, 1), {t});
  CHECK(a == b);
  CHECK((a - b).is_zero());
  CHECK(a.bar() == QHFraction(GroupAlgebraElement::unit(z, t, -1), {t}));
  CHECK_THROWS_AS(b.as_polynomial(), Error);
}

TEST_CASE("series expansion along a direction") {
  auto z = group_of({{0}}, 1);
  GroupElement t = z->generator(0), ti = z->negate(t);
  // t / (t - 1)^2 = sum_{j>=1} j t^{-j} in powers of t^{-1}
  QHFraction x(GroupAlgebraElement::unit(z, t), {t, t});
  CHECK(series_coefficient(x, ti, z->identity()) == 0);
  CHECK(series_coefficient(x, ti, ti) == 1);
  CHECK(series_coefficient(x, ti, z->scale(t, -3)) == 3);
  CHECK(series_coefficient(x, ti, z->scale(t, 2)) == 0);
  // along t: 1/(t-1) = -1 - t - t^2 - ...
  QHFraction y(GroupAlgebraElement::scalar(z, 1), {t});
  CHECK(series_coefficient(y, t, z->scale(t, 4)) == -1);
  CHECK(series_coefficient(y, ti, z->scale(t, -1)) == 1);
}

TEST_CASE("character transform round trip") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> c(-3, 3);
  for (auto rows : std::vector<std::vector<std::vector<long>>>{{{6}}, {{2, 0}, {0, 4}}, {{3, 0, 0}}}) {
    auto h = group_of(rows, rows[0].size());
    GroupAlgebraElement a(h);
    for (const auto& g : h->torsion_elements()) a.add_term(g, c(rng));
    if (h->free_rank() > 0) a.add_term(h->from_coordinates({1, 0}, {c(rng) & 1 ? 1L : 0L}), 2);
    CHECK(character_reassemble(h, character_decompose(a)) == a);
    if (h->free_rank() == 0) CHECK(inverse_torsion_transform(h, torsion_transform(a)) == a);
  }
}

TEST_CASE("valuations") {
  auto h = group_of({{4}}, 1);
  Valuation phi(h, 4, 0, {MonomialValue{1, {}}});
  CHECK(phi(h->scale(h->generator(0), 3)).root % 4 == 3);
  CHECK(phi.is_one(phi(h->scale(h->generator(0), 4))));
  auto a = GroupAlgebraElement::binomial(h, h->generator(0));
  CycLaurent v = apply_phi(a, phi);
  CHECK(v.value_at_one() == Cyclotomic::root_of_unity(4, 1) - Cyclotomic(4, 1));
}
