#include "tl/jacobsthal.hpp"

#include <algorithm>
#include <stdexcept>

#include "tl/combin.hpp"

namespace tl {

JacobsthalElement jacobsthal_element(int n, int l, Convention const& c, int ratio_sign) {
  if (l < 0 || l > n) throw std::out_of_range("Jacobsthal element needs 0 <= l <= n");
  if (ratio_sign != 1 && ratio_sign != -1) throw std::invalid_argument("ratio_sign must be +1 or -1");
  LaurentPoly const rho = LaurentPoly(ratio_sign) * mu_over_lambda(c);
  JacobsthalElement out{n, l, Element(n), 0, ratio_sign};
  for (auto const& seq : descending_opposite_parity_sequences(l)) {
    int const r = static_cast<int>(seq.size());
    LaurentPoly coeff = rho.pow(static_cast<unsigned>(r));
    if ((r - 1 + l) % 2 != 0) coeff = -coeff;
    std::vector<int> indices;
    indices.reserve(seq.size());
    for (int a : seq) indices.push_back(a + n - l);
    out.element += coeff * word_product(n, indices, c, GeneratorKind::U);
    ++out.term_count;
  }
  return out;
}

bool TheoremDReport::matches(int degree, int ratio_sign) const {
  for (auto const& cmp : comparisons)
    if (cmp.degree == degree && cmp.ratio_sign == ratio_sign) return cmp.match;
  throw std::out_of_range("no comparison recorded for that degree and sign");
}

TheoremDReport verify_theorem_D(ChainComplexData const& cx) {
  int const n = cx.strands();
  TheoremDReport report{n, cx.convention().name(), {}, {}};
  bool all_match[2] = {true, true};  // index 0: +1, index 1: -1
  for (int i = 0; i <= n - 1; ++i) {
    for (int sign : {1, -1}) {
      auto jac = jacobsthal_element(n, i + 1, cx.convention(), sign);
      PolyMatrix candidate = right_multiplication_matrix(cx.basis(i), cx.basis(i - 1), jac.element);
      auto diff = first_difference(cx.differential(i), candidate);
      report.comparisons.push_back({i, sign, !diff.has_value(), diff});
      if (diff) all_match[sign == 1 ? 0 : 1] = false;
    }
  }
  if (all_match[0]) report.matching_signs.push_back(1);
  if (all_match[1]) report.matching_signs.push_back(-1);
  return report;
}

TheoremDReport verify_theorem_D(int n, Convention const& c) { return verify_theorem_D(build_complex(n, c)); }

PolyMatrix top_jacobsthal_matrix(int n, Convention const& c, int ratio_sign) {
  auto all = black_box_basis(n, 0);
  return right_multiplication_matrix(all, all, jacobsthal_element(n, n, c, ratio_sign).element);
}

long jacobsthal_kernel_rank(int n, Convention const& c, int ratio_sign, std::span<Rational const> points) {
  if (points.empty()) throw std::invalid_argument("need at least one specialization point");
  PolyMatrix m = top_jacobsthal_matrix(n, c, ratio_sign);
  std::optional<std::size_t> common;
  for (auto const& x : points) {
    std::size_t r = rank_at(m, x);
    if (common && *common != r) throw std::runtime_error("specialization ranks disagree");
    common = r;
  }
  return static_cast<long>(m.cols()) - static_cast<long>(*common);
}

}  // namespace tl
