#include <doctest.h>

#include <random>

#include "tl/coeff.hpp"

using namespace tl;

namespace {

LaurentPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> count(0, 4), exp(-5, 5), coef(-7, 7);
  LaurentPoly p;
  int k = count(rng);
  for (int i = 0; i < k; ++i) p += LaurentPoly::monomial(coef(rng), exp(rng));
  return p;
}

}  // namespace

TEST_CASE("laurent basics") {
  LaurentPoly a = LaurentPoly::loop_value();
  CHECK(a.to_string() == "v^1 + v^-1");
  CHECK(LaurentPoly(0).to_string() == "0");
  CHECK((LaurentPoly::monomial(-2, 3) + 1).to_string() == "-2*v^3 + 1");
  CHECK(a * a == LaurentPoly::monomial(1, 2) + 2 + LaurentPoly::monomial(1, -2));
  CHECK((a - LaurentPoly::v() - LaurentPoly::v_inv()).is_zero());
  CHECK(LaurentPoly(1).is_one());
  CHECK(a.coefficient(1) == 1);
  CHECK(a.coefficient(0) == 0);
  CHECK(a.min_exponent() == -1);
  CHECK(a.max_exponent() == 1);
}

TEST_CASE("units") {
  LaurentPoly u = LaurentPoly::monomial(-1, 3);
  CHECK(u.is_unit());
  CHECK(u * u.unit_inverse() == LaurentPoly(1));
  CHECK_FALSE(LaurentPoly::loop_value().is_unit());
  CHECK_THROWS_AS(LaurentPoly(2).unit_inverse(), std::domain_error);
  CHECK(LaurentPoly::v().pow(0) == LaurentPoly(1));
  CHECK(LaurentPoly::loop_value().pow(3) ==
        LaurentPoly::loop_value() * LaurentPoly::loop_value() * LaurentPoly::loop_value());
}

TEST_CASE("parse") {
  CHECK(LaurentPoly::parse("v^1 + v^-1") == LaurentPoly::loop_value());
  CHECK(LaurentPoly::parse("v") == LaurentPoly::v());
  CHECK(LaurentPoly::parse("-2*v^3 + 1") == LaurentPoly::monomial(-2, 3) + 1);
  CHECK(LaurentPoly::parse("0").is_zero());
  CHECK_THROWS_AS(LaurentPoly::parse("v^"), std::invalid_argument);
  CHECK_THROWS_AS(LaurentPoly::parse("x"), std::invalid_argument);
  CHECK(parse_rational("-3/6") == Rational(-1, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
}

TEST_CASE("specialize") {
  CHECK(specialize(LaurentPoly::loop_value(), Rational(2)) == Rational(5, 2));
  CHECK(specialize(LaurentPoly::monomial(3, -2), Rational(1, 2)) == Rational(12));
  CHECK_THROWS_WITH_AS(specialize(LaurentPoly::v(), Rational(0)), "v must be a unit", std::domain_error);
}

TEST_CASE("conventions") {
  auto a = Convention::A();
  auto b = Convention::B();
  CHECK(a.lambda == LaurentPoly(-1));
  CHECK(a.mu == LaurentPoly::v());
  CHECK(b.lambda == LaurentPoly::monomial(1, 2));
  CHECK(b.mu == LaurentPoly::monomial(-1, 1));
  CHECK(mu_over_lambda(a) == LaurentPoly::monomial(-1, 1));
  CHECK(mu_over_lambda(b) == LaurentPoly::monomial(-1, -1));
}

TEST_CASE("ring axioms and specialization homomorphism (random)") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 300; ++trial) {
    auto p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
    CHECK(p + q == q + p);
    CHECK(p * q == q * p);
    CHECK((p + q) + r == p + (q + r));
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p - p == LaurentPoly(0));
    CHECK(poly_add(p, q) == p + q);
    CHECK(poly_mul(p, q) == p * q);
    LaurentPoly acc = r;
    acc.add_product(p, q);
    CHECK(acc == r + p * q);
    CHECK(LaurentPoly::parse(p.to_string()) == p);
    for (Rational x : {Rational(2), Rational(-3, 5)}) {
      CHECK(specialize(p + q, x) == specialize(p, x) + specialize(q, x));
      CHECK(specialize(p * q, x) == specialize(p, x) * specialize(q, x));
    }
  }
}
