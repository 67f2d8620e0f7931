#pragma once

// The complex of planar injective words W(n).
//
// Degree i (-1 <= i <= n-1) is TL_n (x)_{TL_{n-i-1}} 1, realized as the
// black-box basis with box size n-i-1; degree -1 has box size n and so only
// the identity diagram survives, which is the trivial module.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "tl/indmod.hpp"
#include "tl/linalg.hpp"

namespace tl {

class ChainComplexData {
 public:
  ChainComplexData(int n, Convention convention, std::vector<BasisPtr> bases, std::vector<PolyMatrix> differentials);

  int strands() const { return n_; }
  Convention const& convention() const { return convention_; }
  int min_degree() const { return -1; }
  int max_degree() const { return n_ - 1; }

  BasisPtr const& basis(int degree) const;
  std::size_t chain_rank(int degree) const { return basis(degree)->size(); }
  /// d^i : degree i -> degree i-1, for 0 <= i <= n-1.
  PolyMatrix const& differential(int degree) const;

 private:
  int n_;
  Convention convention_;
  std::vector<BasisPtr> bases_;             // index = degree + 1
  std::vector<PolyMatrix> differentials_;  // index = degree
};

/// Sum_{j=0}^{i} (-1)^j lambda^-j s_{n-i+j-1} ... s_{n-i} (indices decreasing
/// left to right). Right multiplication by it, then projection, is d^i.
Element boundary_element(int n, int degree, Convention const& c);

/// Matrix of y -> quotient_project(y * x) from `domain` to `codomain`.
PolyMatrix right_multiplication_matrix(BasisPtr const& domain, BasisPtr const& codomain, Element const& x);

ChainComplexData build_complex(int n, Convention const& c);

/// First pair (i, i+1) with d^i o d^(i+1) != 0, or -1 when the complex is
/// a complex. Checked symbolically.
int first_nonzero_composite(ChainComplexData const& cx);

/// Sum_{i=-1}^{n-1} (-1)^i rank W(n)_i.
long euler_characteristic(ChainComplexData const& cx);

/// Ranks of W(n)_i for i = -1..n-1 (index 0 is degree -1), counted from the
/// black-box bases without building any differential.
std::vector<std::size_t> chain_ranks(int n);
/// Alternating sum of ranks listed from degree -1 upwards.
long euler_characteristic(std::span<std::size_t const> ranks_from_degree_minus_one);

struct DegreeHomology {
  int degree;
  std::size_t chain_rank;
  std::size_t differential_rank;  // rank of d^degree (0 for degree -1)
  long homology_rank;
};

struct HomologyReport {
  int n;
  char convention;
  std::vector<Rational> points;
  std::vector<DegreeHomology> degrees;  // ordered by degree, -1 first
  long euler_characteristic;
  long homology_euler_characteristic;  // Sum (-1)^i homology rank
  long fineberg_rank;                   // homology rank in degree n-1
  bool lower_homology_vanishes;         // H_d = 0 for d <= n-2

  long homology(int degree) const { return degrees.at(static_cast<std::size_t>(degree + 1)).homology_rank; }
};

/// Ranks of every differential at each point. Throws std::runtime_error
/// ("specialization ranks disagree") when the points give different ranks,
/// and std::invalid_argument unless there are >= 2 distinct nonzero points.
HomologyReport homology_ranks(ChainComplexData const& cx, std::span<Rational const> points);

/// Rank-level check: rank F_n = Sum_{m=0}^n (-1)^m B_m(n), with rank F_n
/// read off the complex's chain ranks via the vanishing lower homology.
bool theorem_B_rank_identity(int n);

/// The default specialization points v = 2 and v = 3.
std::vector<Rational> default_points();

}  // namespace tl
