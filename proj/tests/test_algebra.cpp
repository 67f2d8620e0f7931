#include <doctest.h>

#include <random>
#include <vector>

#include "tl/algebra.hpp"

using namespace tl;

namespace {

Element random_element(int n, std::mt19937& rng) {
  auto all = enumerate_diagrams(n);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  std::uniform_int_distribution<int> coef(-3, 3), exp(-2, 2), count(0, 3);
  Element x(n);
  int k = count(rng);
  for (int t = 0; t < k; ++t) x.add_term(all[pick(rng)], LaurentPoly::monomial(coef(rng), exp(rng)));
  return x;
}

LaurentPoly const a = LaurentPoly::loop_value();
LaurentPoly const v = LaurentPoly::v();

}  // namespace

TEST_CASE("element basics") {
  Element u = Element::U(2, 1);
  CHECK(u * u == a * u);
  CHECK((u - u).is_zero());
  CHECK(Element(2).to_string() == "0");
  CHECK(u.to_string() == "(1) * udud");
  CHECK((Element::one(2) + u).terms().size() == 2);
  CHECK(elt_mul(u, Element::one(2)) == u);
  CHECK(u.coefficient(identity(2)).is_zero());
}

TEST_CASE("braiding elements") {
  auto A = Convention::A();
  auto B = Convention::B();
  for (int n = 2; n <= 4; ++n)
    for (int i = 1; i < n; ++i) {
      CHECK(braiding_s(n, i, A) == v * Element::U(n, i) - Element::one(n));
      CHECK(braiding_s(n, i, B) == LaurentPoly::monomial(1, 2) * Element::one(n) - v * Element::U(n, i));
    }
  for (auto const& c : {A, B}) {
    Element lhs = braiding_s(3, 1, c) * braiding_s(3, 2, c) * braiding_s(3, 1, c);
    Element rhs = braiding_s(3, 2, c) * braiding_s(3, 1, c) * braiding_s(3, 2, c);
    CHECK(lhs == rhs);
    for (int n = 2; n <= 8; ++n)
      for (int i = 1; i < n; ++i) {
        CHECK(braiding_s(n, i, c) * braiding_s_inv(n, i, c) == Element::one(n));
        CHECK(augment(braiding_s(n, i, c)) == c.lambda);
        CHECK(augment(Element::U(n, i)).is_zero());
      }
  }
}

TEST_CASE("word products") {
  auto A = Convention::A();
  std::vector<int> w{4, 3};
  CHECK(word_product(5, w, A, GeneratorKind::s) == braiding_s(5, 4, A) * braiding_s(5, 3, A));
  std::vector<int> twice{2, 2};
  CHECK(word_product(4, twice, A, GeneratorKind::U) == a * Element::U(4, 2));
  std::vector<int> none;
  CHECK(word_product(3, none, A, GeneratorKind::U) == Element::one(3));
  std::vector<int> inv{1};
  CHECK(word_product(3, inv, A, GeneratorKind::s_inv) == braiding_s_inv(3, 1, A));
}

TEST_CASE("algebra properties (random)") {
  std::mt19937 rng(99);
  for (int n = 1; n <= 4; ++n)
    for (int t = 0; t < 60; ++t) {
      Element x = random_element(n, rng), y = random_element(n, rng), z = random_element(n, rng);
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * (y + z) == x * y + x * z);
      CHECK((x + y) * z == x * z + y * z);
      CHECK(x * Element::one(n) == x);
      CHECK(augment(x * y) == augment(x) * augment(y));
      CHECK(augment(x + y) == augment(x) + augment(y));
    }
}
