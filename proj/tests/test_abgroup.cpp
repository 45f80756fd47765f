#include <random>

#include "doctest.h"
#include "tsw/abgroup/group.hpp"
#include "tsw/error.hpp"

using namespace tsw;

namespace {

FgAbelianGroup group_of(const std::vector<std::vector<long>>& rows, std::size_t n) {
  return FgAbelianGroup::from_relations(IntMatrix::from_rows(rows, n));
}

}  // namespace

TEST_CASE("determinant and rank") {
  CHECK(determinant(IntMatrix(0, 0)) == 1);
  CHECK(determinant(IntMatrix::from_rows({{0, 1}, {1, 0}}, 2)) == -1);
  CHECK(determinant(IntMatrix::from_rows({{2, 1, 0}, {1, 2, 1}, {0, 1, 2}}, 3)) == 4);
  CHECK(rank(IntMatrix::from_rows({{1, 2}, {2, 4}}, 2)) == 1);
  CHECK(rank(IntMatrix(3, 3)) == 0);
}

TEST_CASE("smith normal form reconstructs the matrix") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<long> d(-6, 6);
  for (int trial = 0; trial < 50; ++trial) {
    IntMatrix a(3, 4);
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 4; ++c) a(r, c) = d(rng);
    auto s = smith_normal_form(a);
    CHECK(s.U * a * s.V == s.D);
    CHECK(s.V * s.V_inverse == IntMatrix::identity(4));
    for (std::size_t i = 0; i + 1 < 3; ++i)
      if (s.D(i, i) != 0) CHECK(s.D(i + 1, i + 1) % s.D(i, i) == 0);
  }
}

TEST_CASE("presented groups") {
  CHECK(group_of({{0, 1}, {1, 0}}, 2).is_trivial());
  CHECK(group_of({{0}}, 1).describe() == "Z");
  CHECK(group_of({{5}}, 1).describe() == "Z/5");
  CHECK(group_of({{2, 0}, {0, 3}}, 2).describe() == "Z/6");
  auto g = group_of({{2, 0, 0}}, 3);
  CHECK(g.describe() == "Z^2 + Z/2");
  CHECK(g.torsion_order() == 2);
  CHECK(g.torsion_elements().size() == 2);
  CHECK(g.torsion_characters().size() == 2);
  CHECK(FgAbelianGroup::free(3).free_rank() == 3);
}

TEST_CASE("element arithmetic follows the presentation") {
  auto g = group_of({{4, 2}, {2, 4}}, 2);  // order 12
  CHECK(g.torsion_order() == 12);
  GroupElement a = g.generator(0), b = g.generator(1);
  CHECK(g.is_identity(g.add(g.scale(a, 4), g.scale(b, 2))));
  CHECK(g.is_identity(g.add(a, g.negate(a))));
  CHECK(g.element(g.word(g.add(a, b))) == g.add(a, b));
  CHECK(g.order(a).value_or(0) > 0);
  std::size_t chars = g.torsion_characters().size();
  CHECK(chars == 12);
  // characters are homomorphisms
  for (const auto& chi : g.torsion_characters()) {
    long n = chi.conductor();
    CHECK((chi.value(a) + chi.value(b)) % n == chi.value(g.add(a, b)) % n);
  }
}

TEST_CASE("quotients and homomorphisms") {
  auto h = std::make_shared<FgAbelianGroup>(group_of({{6}}, 1));
  auto q = quotient_and_kernel(h, {h->scale(h->generator(0), 2)});
  CHECK(q.group->describe() == "Z/2");
  CHECK(q.kernel.size() == 3);
  auto z2 = std::make_shared<FgAbelianGroup>(group_of({{2}}, 1));
  GroupHom f(h, z2, {z2->generator(0)});
  CHECK(f(h->scale(h->generator(0), 3)) == z2->generator(0));
  CHECK_THROWS_AS(GroupHom(z2, h, {h->generator(0)}), Error);
}
