#include <doctest.h>

#include <random>

#include "matwalk/scalar.hpp"

using namespace matwalk;

namespace {

Scalar random_scalar(std::mt19937_64& rng, int variant, bool nonzero) {
  std::uniform_int_distribution<int> small(-6, 6);
  int v = small(rng);
  if (nonzero && v == 0) v = 1;
  switch (variant) {
    case 0:
      return Scalar::integer(v);
    case 1: {
      std::uniform_int_distribution<int> den(1, 6);
      return Scalar::rational(v, den(rng));
    }
    default: {
      // Small polynomial in x_{1,2} and x_{2,1} with a nonzero constant
      // term when nonzero is required.
      Scalar p = Scalar::integer(nonzero ? (v == 0 ? 1 : v) : v);
      std::uniform_int_distribution<int> coin(0, 1);
      if (coin(rng)) p = p + Scalar::variable(1, 2) * Scalar::integer(small(rng));
      if (coin(rng)) p = p + Scalar::variable(2, 1) * Scalar::integer(small(rng));
      if (p.is_polynomial()) return p;
      return p + Scalar::variable(1, 2) - Scalar::variable(1, 2);
    }
  }
}

}  // namespace

TEST_CASE("zero absorbs under multiplication") {
  std::mt19937_64 rng(7);
  for (int variant = 0; variant < 3; ++variant) {
    for (int i = 0; i < 20; ++i) {
      const Scalar x = random_scalar(rng, variant, false);
      CHECK((Scalar::integer(0) * x).is_zero());
    }
  }
}

TEST_CASE("rational power") {
  const Scalar q = Scalar::rational(2, 3);
  CHECK(q.pow(2) == Scalar::rational(4, 9));
}

TEST_CASE("polynomial product (x12 + 1)(x12 - 1) expands to x12^2 - 1") {
  const Scalar x = Scalar::variable(1, 2);
  const Scalar product = (x + Scalar::integer(1)) * (x - Scalar::integer(1));
  // Hand oracle: distribute the four partial products and recollect.
  const Scalar expected = x * x + x - x - Scalar::integer(1);
  CHECK(product == expected);
  CHECK(product == x.pow(2) - Scalar::integer(1));
  CHECK(product.str() == "-1 + x_1_2^2");
}

TEST_CASE("rational normalization") {
  CHECK(Scalar::parse("2/4") == Scalar::rational(1, 2));
  CHECK(Scalar::parse("2/4").str() == "1/2");
  CHECK(Scalar::parse("-6/4").str() == "-3/2");
  CHECK(Scalar::parse("-12").str() == "-12");
}

TEST_CASE("entry grammar rejects anything else") {
  CHECK_THROWS_AS(Scalar::parse("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(Scalar::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Scalar::parse("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(Scalar::parse("x"), std::invalid_argument);
  CHECK_THROWS_AS(Scalar::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Scalar::parse("1/01"), std::invalid_argument);
}

TEST_CASE("integers embed, rationals and polynomials do not mix") {
  CHECK(Scalar::integer(2) == Scalar::rational(4, 2));
  CHECK(Scalar::integer(3) * Scalar::variable(1, 1) == Scalar::variable(1, 1) * Scalar::integer(3));
  CHECK_THROWS_AS(Scalar::rational(1, 2) * Scalar::variable(1, 1), std::invalid_argument);
}

TEST_CASE("ring axioms on randomized triples") {
  std::mt19937_64 rng(99);
  for (int variant = 0; variant < 3; ++variant) {
    for (int i = 0; i < 50; ++i) {
      const Scalar a = random_scalar(rng, variant, false);
      const Scalar b = random_scalar(rng, variant, false);
      const Scalar c = random_scalar(rng, variant, false);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK(a + b == b + a);
    }
  }
}

TEST_CASE("integral domain: product of nonzeros is nonzero") {
  std::mt19937_64 rng(123);
  for (int variant = 0; variant < 3; ++variant) {
    for (int i = 0; i < 50; ++i) {
      const Scalar a = random_scalar(rng, variant, true);
      const Scalar b = random_scalar(rng, variant, true);
      REQUIRE_FALSE(a.is_zero());
      REQUIRE_FALSE(b.is_zero());
      CHECK_FALSE((a * b).is_zero());
    }
  }
}

TEST_CASE("power of zero exponent is one") {
  CHECK(Scalar::integer(17).pow(0) == Scalar::integer(1));
  CHECK(Scalar::variable(3, 4).pow(0) == Scalar::integer(1));
  CHECK(Scalar::rational(-3, 7).pow(0) == Scalar::integer(1));
}

TEST_CASE("ratio equality is cross multiplication") {
  const auto r = [](long n, long d) { return Ratio(Scalar::integer(n), Scalar::integer(d)); };
  CHECK(ratio_eq(r(2, 1), r(4, 2)));
  CHECK(ratio_eq(r(3, 5), r(6, 10)));
  CHECK_FALSE(ratio_eq(r(3, 5), r(6, 11)));

  const Scalar x12 = Scalar::variable(1, 2);
  const Scalar x21 = Scalar::variable(2, 1);
  CHECK(ratio_eq(Ratio(x12 * x21, x21 * x12), Ratio(Scalar::integer(1), Scalar::integer(1))));
}

TEST_CASE("ratios reject zero components") {
  CHECK_THROWS_AS(Ratio(Scalar::integer(0), Scalar::integer(1)), std::invalid_argument);
  CHECK_THROWS_AS(Ratio(Scalar::integer(1), Scalar::integer(0)), std::invalid_argument);
}
