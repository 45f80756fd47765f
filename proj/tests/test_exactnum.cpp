#include <random>

#include "doctest.h"
#include "tsw/error.hpp"
#include "tsw/exactnum/cyclotomic.hpp"

using namespace tsw;

TEST_CASE("rationals parse and stay canonical") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(parse_rational("+5/10").get_str() == "1/2");
  CHECK_THROWS_AS(parse_rational("1/"), Error);
  CHECK_THROWS_AS(parse_rational("x"), Error);
  CHECK_THROWS_AS(parse_rational("1.5"), Error);
  CHECK(ratio(8, 18).get_str() == "4/9");
  CHECK(ratio(-3, 6) == Rational(-1, 2));
}

TEST_CASE("cyclotomic polynomials and totients") {
  CHECK(cyclotomic_polynomial(1) == std::vector<long>{-1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<long>{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<long>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<long>{1, 0, -1, 0, 1});
  for (long n : {1, 2, 6, 7, 12, 30}) CHECK(static_cast<long>(cyclotomic_polynomial(n).size()) == euler_phi(n) + 1);
}

TEST_CASE("roots of unity") {
  Cyclotomic i = Cyclotomic::root_of_unity(4, 1);
  CHECK(i * i == Cyclotomic(4, -1));
  CHECK(Cyclotomic::root_of_unity(6, 3) == Cyclotomic(6, -1));
  // 1 + z + ... + z^{n-1} = 0 for a primitive root
  for (long n : {2, 3, 5, 6, 8}) {
    Cyclotomic s(n);
    for (long j = 0; j < n; ++j) s += Cyclotomic::root_of_unity(n, j);
    CHECK(s.is_zero());
  }
  CHECK(Cyclotomic::root_of_unity(5, 2).conjugate() == Cyclotomic::root_of_unity(5, 3));
  CHECK(Cyclotomic::root_of_unity(2, 1).embed(4) == Cyclotomic(4, -1));
  CHECK(Cyclotomic::root_of_unity(3, 1).times_root(2) == Cyclotomic(3, 1));
}

TEST_CASE("field axioms on random elements") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> c(-5, 5);
  for (long n : {3, 4, 5, 7, 9, 12}) {
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Rational> a(static_cast<std::size_t>(n)), b(static_cast<std::size_t>(n));
      for (auto& x : a) x = c(rng);
      for (auto& x : b) x = c(rng);
      Cyclotomic x = Cyclotomic::from_powers(n, a), y = Cyclotomic::from_powers(n, b);
      CHECK(x * y == y * x);
      CHECK((x + y) - y == x);
      if (!y.is_zero()) CHECK(x * y * y.inverse() == x);
      CHECK((x * y).conjugate() == x.conjugate() * y.conjugate());
    }
  }
}

TEST_CASE("rational detection") {
  Cyclotomic z = Cyclotomic::root_of_unity(5, 1);
  CHECK_FALSE(z.is_rational());
  Cyclotomic tr = z + z.conjugate() + Cyclotomic::root_of_unity(5, 2) + Cyclotomic::root_of_unity(5, 3);
  CHECK(tr.is_rational());
  CHECK(tr.rational_value() == -1);
}
