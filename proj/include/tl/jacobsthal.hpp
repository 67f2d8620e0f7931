#pragma once

// Jacobsthal elements of TL_n and the comparison of right multiplication by
// them with the boundary maps of W(n).

#include <optional>
#include <span>
#include <vector>

#include "tl/complex.hpp"

namespace tl {

struct JacobsthalElement {
  int n;
  int l;
  Element element;
  long term_count;  // monomials summed, before any simplification
  int ratio_sign;   // +1: ratio mu/lambda, -1: ratio -(mu/lambda)
};

/// Sum over l > a_1 > ... > a_r > 0 with l - a_1 odd of
/// (-1)^(r-1+l) rho^r U_{a_1+n-l} ... U_{a_r+n-l}, rho = ratio_sign * mu/lambda.
/// The empty sequence (odd l only) contributes the constant 1.
JacobsthalElement jacobsthal_element(int n, int l, Convention const& c, int ratio_sign);

struct DegreeComparison {
  int degree;
  int ratio_sign;
  bool match;
  std::optional<EntryDiff> first_difference;
};

struct TheoremDReport {
  int n;
  char convention;
  std::vector<DegreeComparison> comparisons;  // by degree, then sign +1 before -1
  /// Signs that match at every degree.
  std::vector<int> matching_signs;

  bool matches(int degree, int ratio_sign) const;
};

/// Compares d^i from the complex with right multiplication by J^n_{i+1}
/// (projected to box size n-i) for every degree and both signs.
TheoremDReport verify_theorem_D(ChainComplexData const& cx);
TheoremDReport verify_theorem_D(int n, Convention const& c);

/// Matrix of x -> x * J_n on TL_n in the Dyck-lex diagram basis.
PolyMatrix top_jacobsthal_matrix(int n, Convention const& c, int ratio_sign);

/// Kernel rank of right multiplication by J_n at each point; throws
/// std::runtime_error("specialization ranks disagree") on disagreement.
long jacobsthal_kernel_rank(int n, Convention const& c, int ratio_sign, std::span<Rational const> points);

}  // namespace tl
