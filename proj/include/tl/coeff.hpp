#pragma once

// Exact coefficient arithmetic: Laurent polynomials in v over Z, rationals,
// and the two braiding conventions (lambda, mu).

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tl {

using Integer = mpz_class;
using Rational = mpq_class;

/// Integer-coefficient Laurent polynomial in one variable v.
///
/// Terms are kept sorted by increasing exponent with no zero coefficients,
/// so structural equality is mathematical equality.
class LaurentPoly {
 public:
  using Term = std::pair<int, Integer>;  // (exponent, coefficient)

  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT: constants convert implicitly
  explicit LaurentPoly(Integer c);

  static LaurentPoly monomial(Integer c, int exponent);
  static LaurentPoly v() { return monomial(1, 1); }
  static LaurentPoly v_inv() { return monomial(1, -1); }
  /// a = v + v^-1, the loop value.
  static LaurentPoly loop_value();

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  std::size_t size() const { return terms_.size(); }
  std::vector<Term> const& terms() const { return terms_; }
  Integer coefficient(int exponent) const;
  int min_exponent() const;
  int max_exponent() const;

  /// True for +-v^k, the units of Z[v, v^-1].
  bool is_unit() const;
  /// Inverse of a unit; throws std::domain_error otherwise.
  LaurentPoly unit_inverse() const;
  LaurentPoly pow(unsigned k) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(LaurentPoly const& q);
  LaurentPoly& operator-=(LaurentPoly const& q);
  LaurentPoly& operator*=(LaurentPoly const& q);
  /// this += p * q without a temporary.
  void add_product(LaurentPoly const& p, LaurentPoly const& q);

  friend LaurentPoly operator+(LaurentPoly p, LaurentPoly const& q) { return p += q; }
  friend LaurentPoly operator-(LaurentPoly p, LaurentPoly const& q) { return p -= q; }
  friend LaurentPoly operator*(LaurentPoly const& p, LaurentPoly const& q);
  friend bool operator==(LaurentPoly const& p, LaurentPoly const& q) = default;

  /// Canonical text: terms by decreasing exponent, `c*v^e`, unit
  /// coefficients elided, e.g. `v^1 + v^-1`, `-2*v^3 + 1`, `0`.
  std::string to_string() const;
  static LaurentPoly parse(std::string_view text);

 private:
  std::vector<Term> terms_;
};

LaurentPoly poly_add(LaurentPoly const& p, LaurentPoly const& q);
LaurentPoly poly_mul(LaurentPoly const& p, LaurentPoly const& q);

/// Evaluates p at v = x. Throws std::domain_error("v must be a unit") at 0.
Rational specialize(LaurentPoly const& p, Rational const& x);

std::string to_string(Rational const& x);
/// Accepts `p`, `-p`, `p/q`; throws std::invalid_argument on junk or q = 0.
Rational parse_rational(std::string_view text);

enum class ConventionTag { A, B };

/// The pair (lambda, mu) used in s_i = lambda + mu U_i.
struct Convention {
  ConventionTag tag;
  LaurentPoly lambda;
  LaurentPoly mu;

  static Convention make(ConventionTag tag);
  static Convention A() { return make(ConventionTag::A); }
  static Convention B() { return make(ConventionTag::B); }
  char name() const { return tag == ConventionTag::A ? 'A' : 'B'; }
};

/// mu / lambda: -v for convention A, -v^-1 for convention B.
LaurentPoly mu_over_lambda(Convention const& c);

}  // namespace tl
