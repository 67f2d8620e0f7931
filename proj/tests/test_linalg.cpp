#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "tl/linalg.hpp"

using namespace tl;

namespace {

PolyMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937& rng, int density_percent) {
  std::uniform_int_distribution<int> coef(-3, 3), exp(-2, 2), pct(0, 99);
  PolyMatrix m(rows, cols);
  for (std::size_t c = 0; c < cols; ++c) {
    PolyMatrix::Column col;
    for (std::size_t r = 0; r < rows; ++r) {
      if (pct(rng) >= density_percent) continue;
      LaurentPoly p = LaurentPoly::monomial(coef(rng), exp(rng)) + LaurentPoly::monomial(coef(rng), exp(rng));
      if (!p.is_zero()) col.emplace_back(r, p);
    }
    m.set_column(c, std::move(col));
  }
  return m;
}

std::vector<std::vector<mpq_class>> dense_at(PolyMatrix const& m, Rational const& x) {
  std::vector<std::vector<mpq_class>> out(m.rows(), std::vector<mpq_class>(m.cols()));
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (auto const& [r, p] : m.column(c)) out[r][c] = specialize(p, x);
  return out;
}

}  // namespace

TEST_CASE("trivial ranks") {
  CHECK(rank_at(PolyMatrix(4, 3), Rational(2)) == 0);
  CHECK(rank_at(PolyMatrix::identity(5), Rational(3)) == 5);
  CHECK(PolyMatrix(2, 2).is_zero());
  CHECK_THROWS_WITH_AS(rank_at(PolyMatrix::identity(2), Rational(0)), "v must be a unit", std::domain_error);
  RationalMatrix q(2, 2);
  q(0, 0) = 1;
  q(0, 1) = 2;
  q(1, 0) = Rational(1, 2);
  q(1, 1) = 1;
  CHECK(rank(q) == 1);
}

TEST_CASE("set_column validation") {
  PolyMatrix m(2, 1);
  CHECK_THROWS(m.set_column(0, {{1, LaurentPoly(1)}, {0, LaurentPoly(1)}}));
  CHECK_THROWS(m.set_column(0, {{0, LaurentPoly(0)}}));
  CHECK_THROWS(m.set_column(0, {{2, LaurentPoly(1)}}));
}

TEST_CASE("rank agrees with dense elimination oracle") {
  std::mt19937 rng(5);
  for (int t = 0; t < 120; ++t) {
    std::uniform_int_distribution<std::size_t> dim(1, 9);
    std::size_t rows = dim(rng), cols = dim(rng);
    PolyMatrix m = random_matrix(rows, cols, rng, t % 2 ? 30 : 70);
    // force some dependence
    if (cols >= 2) {
      PolyMatrix::Column copy = m.column(0);
      for (auto& [r, p] : copy) p *= LaurentPoly::v();
      m.set_column(cols - 1, copy);
    }
    for (Rational x : {Rational(2), Rational(3), Rational(-1, 2), Rational(1)}) {
      CHECK(rank_at(m, x) == oracle::dense_rank(dense_at(m, x)));
      auto d = dense_at(m, x);
      RationalMatrix q(rows, cols);
      for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) q(r, c) = d[r][c];
      CHECK(rank(q) == oracle::dense_rank(d));
    }
  }
}

TEST_CASE("compose and first_difference") {
  std::mt19937 rng(8);
  PolyMatrix a = random_matrix(3, 4, rng, 60);
  PolyMatrix b = random_matrix(4, 2, rng, 60);
  PolyMatrix ab = compose(a, b);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 2; ++c) {
      LaurentPoly want;
      for (std::size_t k = 0; k < 4; ++k) want += a.entry(r, k) * b.entry(k, c);
      CHECK(ab.entry(r, c) == want);
    }
  CHECK(compose(PolyMatrix::identity(3), a) == a);
  CHECK_FALSE(first_difference(a, a).has_value());
  PolyMatrix a2 = a;
  PolyMatrix::Column col = a.column(1);
  col.clear();
  col.emplace_back(2, LaurentPoly(42));
  a2.set_column(1, col);
  auto diff = first_difference(a, a2);
  REQUIRE(diff.has_value());
  CHECK(diff->col == 1);
  CHECK_THROWS_AS(first_difference(a, b), std::invalid_argument);
}
