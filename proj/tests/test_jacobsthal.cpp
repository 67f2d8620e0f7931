#include <doctest.h>

#include "oracles.hpp"
#include "tl/combin.hpp"
#include "tl/jacobsthal.hpp"

using namespace tl;

TEST_CASE("small jacobsthal elements") {
  auto A = Convention::A();
  auto j1 = jacobsthal_element(3, 1, A, 1);
  CHECK(j1.element == Element::one(3));
  CHECK(j1.term_count == 1);
  // l = 2: the single sequence (1); coefficient (-1)^(0+2) rho.
  for (int sign : {1, -1}) {
    LaurentPoly rho = LaurentPoly(sign) * mu_over_lambda(A);
    CHECK(jacobsthal_element(3, 2, A, sign).element == rho * Element::U(3, 2));
  }
  CHECK_THROWS_AS(jacobsthal_element(3, 4, A, 1), std::out_of_range);
  CHECK_THROWS_AS(jacobsthal_element(3, 2, A, 0), std::invalid_argument);
}

TEST_CASE("term counts are jacobsthal numbers") {
  std::vector<long> want{1, 1, 3, 5, 11, 21};
  for (int l = 1; l <= 6; ++l) CHECK(jacobsthal_element(6, l, Convention::B(), -1).term_count == want[static_cast<std::size_t>(l - 1)]);
  for (int n = 1; n <= 9; ++n)
    for (int l = 1; l <= n; ++l) {
      auto j = jacobsthal_element(n, l, Convention::A(), -1);
      CHECK(Integer(j.term_count) == jacobsthal_number(l));
      // distinct index sequences give distinct reduced monomials
      CHECK(static_cast<long>(j.element.terms().size()) == j.term_count);
    }
}

TEST_CASE("differentials are right multiplication by jacobsthal elements") {
  for (auto const& c : {Convention::A(), Convention::B()}) {
    auto r1 = verify_theorem_D(1, c);
    CHECK(r1.matching_signs == std::vector<int>{1, -1});
    for (int n = 2; n <= 6; ++n) {
      auto r = verify_theorem_D(n, c);
      CHECK(r.matching_signs == std::vector<int>{-1});
      CHECK(r.matches(1, -1));
      CHECK_FALSE(r.matches(1, 1));
      CHECK(r.matches(0, 1));  // J_1 = 1 carries no sign
    }
  }
}

TEST_CASE("kernel of right multiplication by the top element") {
  auto pts = default_points();
  for (auto const& c : {Convention::A(), Convention::B()})
    for (int n = 1; n <= 6; ++n)
      CHECK(jacobsthal_kernel_rank(n, c, -1, pts) == oracle::count_first_peak_even(n));
  CHECK(top_jacobsthal_matrix(3, Convention::A(), -1).cols() == 5);
}
