// Randomized identities over the builtin links with random framings.

#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "tsw/surgery/checks.hpp"
#include "tsw/surgery/torsion.hpp"
#include "tsw/sw/sw.hpp"

using namespace tsw;
using namespace tsw::test;

TEST_CASE("tau depends only on the Euler class") {
  std::mt19937 rng(21);
  for (const auto& name : corpus_names()) {
    auto c = framed(name, random_framings(builtin_link(name).link.size(), rng));
    auto p = surgered_homology(c.link);
    auto k = random_charge(c.link, rng);
    // k + 2 Lambda v is the same class
    std::vector<long> v(k.size());
    for (auto& x : v) x = static_cast<long>(rng() % 3) - 1;
    std::vector<long> k2(k);
    for (std::size_t i = 0; i < k.size(); ++i)
      for (std::size_t j = 0; j < k.size(); ++j) k2[i] += 2 * c.link.lk(i, j) * v[j];
    INFO(name);
    CHECK(EulerClasses(p).equal(k, k2));
    CHECK(tau(p, c.table, k) == tau(p, c.table, k2));
  }
}

TEST_CASE("duality, equivariance and reassembly on random inputs") {
  std::mt19937 rng(5);
  for (const auto& name : corpus_names()) {
    for (int trial = 0; trial < 3; ++trial) {
      auto c = framed(name, random_framings(builtin_link(name).link.size(), rng));
      auto p = surgered_homology(c.link);
      auto k = random_charge(c.link, rng);
      INFO(name << " framings " << c.link.linking_matrix().to_string());
      CHECK(duality_check(p, c.table, k).ok);
      CHECK(cross_check(p, c.table, k).ok);
      std::vector<long> v(k.size());
      for (auto& x : v) x = static_cast<long>(rng() % 5) - 2;
      CHECK(equivariance_check(p, c.table, k, v).ok);
      if (p.b1 > 0) CHECK(projection_check(p, c.table, k).ok);
      if (c.link.algebraically_split()) CHECK(fast_path_check(p, c.table, k).ok);
    }
  }
}

TEST_CASE("integrality ladder") {
  std::mt19937 rng(8);
  for (const auto& name : corpus_names()) {
    for (int trial = 0; trial < 3; ++trial) {
      auto c = framed(name, random_framings(builtin_link(name).link.size(), rng));
      auto p = surgered_homology(c.link);
      auto k = random_charge(c.link, rng);
      QHFraction t = tau(p, c.table, k);
      INFO(name);
      if (p.b1 >= 2) {
        CHECK(t.is_polynomial());
        CHECK(t.as_polynomial().is_integral());
      } else if (p.b1 == 1) {
        GroupElement h = p.h->from_coordinates({1}, std::vector<long>(p.h->invariant_factors().size(), 0));
        CHECK(t.cleared({h, h}).is_integral());
      } else {
        GroupAlgebraElement a = t.as_polynomial();
        Rational aug = 0;
        for (const auto& [g, x] : a.terms()) aug += x;
        CHECK(aug == 0);
      }
    }
  }
}

TEST_CASE("SW values are integers and respect charge conjugation up to sign") {
  std::mt19937 rng(13);
  for (const auto& name : corpus_names()) {
    auto c = framed(name, std::vector<long>(builtin_link(name).link.size(), 0));
    auto p = surgered_homology(c.link);
    if (p.b1 == 0 || (p.b1 == 1 && !p.lone_free_component())) continue;
    auto k = random_charge(c.link, rng);
    std::vector<long> k2(k);
    for (auto& x : k2) x = 2 - x;
    INFO(name);
    Integer a = sw_value(p, c.table, k);
    if (p.b1 >= 2) CHECK(abs(a) == abs(sw_value(p, c.table, k2)));
  }
}

TEST_CASE("mutated tables never pass silently") {
  std::mt19937 rng(17);
  auto c = framed("borromean", {0, 0, 0});
  std::uniform_int_distribution<long> e(-2, 2), d(1, 3);
  int caught = 0, total = 0;
  for (int trial = 0; trial < 25; ++trial) {
    ConwayTable bad = c.table;
    Subset s = static_cast<Subset>(1 + rng() % 7);
    std::vector<long> exps(cardinality(s));
    for (auto& x : exps) x = e(rng);
    Rational old = bad.entry(s).coefficient(exps);
    bad.set_coefficient(s, exps, old + d(rng) * (rng() % 2 ? 1 : -1));
    ++total;
    if (!conway_table_validate(c.link, bad).ok()) {
      ++caught;
      continue;
    }
    try {
      auto p = surgered_homology(c.link);
      tau(p, bad, {1, 1, 1});
    } catch (const Error&) {
      ++caught;
    }
  }
  CHECK(caught == total);
}
