#pragma once

// Catalan, Fine and Jacobsthal numbers, first-peak counts, and two-column
// standard Young tableaux.

#include <string>
#include <vector>

#include "tl/coeff.hpp"

namespace tl {

Integer binomial(long n, long k);

/// C_n = binom(2n, n) - binom(2n, n+1).
Integer catalan(int n);

/// B_m(n): Dyck paths of semilength n whose first peak has height >= m,
/// (m+1)/(n+1) binom(2n-m, n); zero for m > n.
Integer first_peak_count_B(int n, int m);

/// Dyck paths of semilength n with first peak of even height, counted by
/// walking every path.
Integer fine_by_enumeration(int n);
/// Sum_m (-1)^m B_m(n).
Integer fine_by_alternating_B(int n);
/// (1/(n+1)) Sum_{m=0}^n (-1)^m (m+1) binom(2n-m, n), in exact rationals.
Rational fine_alternating_binomial_sum(int n);
/// F_n; all three routes above are computed and must agree
/// (std::logic_error otherwise).
Integer fine(int n);

/// J_n = (2^n - (-1)^n) / 3.
Integer jacobsthal_closed_form(int n);
Integer jacobsthal_by_recursion(int n);
/// Compositions of n whose last part is odd, each written as its parts.
std::vector<std::vector<int>> compositions_ending_odd(int n);
/// Sequences n > a_1 > ... > a_r > 0 with n - a_1 odd (a_1 = 0 for the
/// empty sequence, allowed only for odd n).
std::vector<std::vector<int>> descending_opposite_parity_sequences(int n);
/// J_n; requires n >= 1 and checks all four definitions agree.
Integer jacobsthal_number(int n);

/// Two-column partition given by column lengths c1 >= c2 >= 0.
struct TwoColumnPartition {
  int c1;
  int c2;

  int size() const { return c1 + c2; }
  bool is_single_column() const { return c2 == 0; }
  friend auto operator<=>(TwoColumnPartition const&, TwoColumnPartition const&) = default;
};

/// Throws std::invalid_argument unless c1 >= c2 >= 0.
TwoColumnPartition make_shape(int c1, int c2);

/// All two-column partitions of n, single column first then c2 increasing.
std::vector<TwoColumnPartition> two_column_partitions(int n);

struct Tableau {
  TwoColumnPartition shape;
  std::vector<int> col1;  // top to bottom
  std::vector<int> col2;

  /// Top entry of the second column; n+1 for a single column.
  int second_column_top() const;
};

/// All standard fillings of the shape, lexicographic in col2.
std::vector<Tableau> enumerate_syt(TwoColumnPartition shape);

/// N_{shape,p}: SYT whose first column begins 1, ..., p (N_0 = f).
Integer count_N(TwoColumnPartition shape, int p);

/// SYT whose second-column top is odd.
Integer multiplicity_by_odd_top(TwoColumnPartition shape);
/// Sum_{k=0}^n (-1)^k N_{shape,k}.
Integer multiplicity_by_alternating_N(TwoColumnPartition shape);
/// Both routes, checked equal (std::logic_error otherwise).
Integer theorem_C_multiplicity(TwoColumnPartition shape);

std::string to_string(TwoColumnPartition shape);

}  // namespace tl
