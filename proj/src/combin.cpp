#include "tl/combin.hpp"

#include <algorithm>
#include <stdexcept>

namespace tl {

namespace {

// Enumeration-based Jacobsthal routes are only run up to this n.
constexpr int kJacobsthalEnumerationLimit = 24;

void check_nonnegative(int n, char const* what) {
  if (n < 0) throw std::invalid_argument(std::string(what) + " needs n >= 0");
}

long count_compositions_ending_odd(int remaining) {
  // Last part odd: choose it, then any composition of what is left.
  long total = 0;
  for (int last = 1; last <= remaining; last += 2) {
    int rest = remaining - last;
    total += rest == 0 ? 1 : (1L << (rest - 1));
  }
  return total;
}

void collect_compositions(int remaining, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    if (!prefix.empty() && prefix.back() % 2 == 1) out.push_back(prefix);
    return;
  }
  for (int part = remaining; part >= 1; --part) {
    prefix.push_back(part);
    collect_compositions(remaining - part, prefix, out);
    prefix.pop_back();
  }
}

void collect_descending(int below, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
  out.push_back(prefix);
  for (int a = below - 1; a >= 1; --a) {
    prefix.push_back(a);
    collect_descending(a, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer catalan(int n) {
  check_nonnegative(n, "catalan");
  return binomial(2L * n, n) - binomial(2L * n, n + 1L);
}

Integer first_peak_count_B(int n, int m) {
  check_nonnegative(n, "first_peak_count_B");
  if (m < 0) throw std::invalid_argument("first_peak_count_B needs m >= 0");
  if (m > n) return 0;
  Integer numerator = Integer(m + 1) * binomial(2L * n - m, n);
  if (numerator % (n + 1) != 0) throw std::logic_error("first-peak count is not integral");
  return numerator / (n + 1);
}

Integer fine_by_enumeration(int n) {
  check_nonnegative(n, "fine");
  // Walk all paths step by step. climbing[h]: paths that are still u^h;
  // settled[parity][h]: paths past their first peak at height h.
  std::vector<Integer> climbing(static_cast<std::size_t>(n + 2));
  std::vector<Integer> settled[2] = {std::vector<Integer>(static_cast<std::size_t>(n + 2)),
                                     std::vector<Integer>(static_cast<std::size_t>(n + 2))};
  climbing[0] = 1;
  for (int step = 0; step < 2 * n; ++step) {
    std::vector<Integer> next_climbing(climbing.size());
    std::vector<Integer> next_settled[2] = {std::vector<Integer>(climbing.size()),
                                            std::vector<Integer>(climbing.size())};
    int remaining = 2 * n - step;
    for (int h = 0; h <= n; ++h) {
      auto uh = static_cast<std::size_t>(h);
      if (climbing[uh] != 0) {
        if (h + 1 <= n && h + 1 <= remaining - 1) next_climbing[uh + 1] += climbing[uh];
        if (h >= 1) next_settled[h % 2][uh - 1] += climbing[uh];
      }
      for (int parity = 0; parity < 2; ++parity) {
        auto const& s = settled[parity];
        if (s[uh] == 0) continue;
        if (h + 1 <= remaining - 1) next_settled[parity][uh + 1] += s[uh];
        if (h >= 1) next_settled[parity][uh - 1] += s[uh];
      }
    }
    climbing = std::move(next_climbing);
    settled[0] = std::move(next_settled[0]);
    settled[1] = std::move(next_settled[1]);
  }
  // The empty path has no peak and counts as even.
  return settled[0][0] + climbing[0];
}

Integer fine_by_alternating_B(int n) {
  check_nonnegative(n, "fine");
  Integer total = 0;
  for (int m = 0; m <= n; ++m) {
    Integer b = first_peak_count_B(n, m);
    if (m % 2 == 0) {
      total += b;
    } else {
      total -= b;
    }
  }
  return total;
}

Rational fine_alternating_binomial_sum(int n) {
  check_nonnegative(n, "fine");
  Rational bracket = 0;
  for (int m = 0; m <= n; ++m) {
    Rational term(Integer(m + 1) * binomial(2L * n - m, n));
    if (m % 2 == 0) {
      bracket += term;
    } else {
      bracket -= term;
    }
  }
  Rational result = bracket / Rational(n + 1);
  result.canonicalize();
  return result;
}

Integer fine(int n) {
  Integer walked = fine_by_enumeration(n);
  Integer alternating = fine_by_alternating_B(n);
  Rational binomial_sum = fine_alternating_binomial_sum(n);
  if (walked != alternating || binomial_sum != Rational(walked))
    throw std::logic_error("Fine number routes disagree at n = " + std::to_string(n));
  return walked;
}

Integer jacobsthal_closed_form(int n) {
  check_nonnegative(n, "jacobsthal");
  Integer two_n;
  mpz_ui_pow_ui(two_n.get_mpz_t(), 2, static_cast<unsigned long>(n));
  Integer sign = (n % 2 == 0) ? 1 : -1;
  return (two_n - sign) / 3;
}

Integer jacobsthal_by_recursion(int n) {
  check_nonnegative(n, "jacobsthal");
  Integer previous = 0;  // J_0
  Integer current = 1;   // J_1
  if (n == 0) return previous;
  for (int k = 2; k <= n; ++k) {
    Integer next = current + 2 * previous;
    previous = std::move(current);
    current = std::move(next);
  }
  return current;
}

std::vector<std::vector<int>> compositions_ending_odd(int n) {
  check_nonnegative(n, "compositions");
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  if (n > 0) collect_compositions(n, prefix, out);
  return out;
}

std::vector<std::vector<int>> descending_opposite_parity_sequences(int n) {
  check_nonnegative(n, "sequences");
  std::vector<std::vector<int>> all;
  std::vector<int> prefix;
  collect_descending(n, prefix, all);
  std::vector<std::vector<int>> out;
  for (auto& seq : all) {
    int a1 = seq.empty() ? 0 : seq.front();
    if ((n - a1) % 2 != 0) out.push_back(std::move(seq));
  }
  return out;
}

Integer jacobsthal_number(int n) {
  if (n < 1) throw std::invalid_argument("jacobsthal_number needs n >= 1");
  Integer closed = jacobsthal_closed_form(n);
  bool agree = closed == jacobsthal_by_recursion(n);
  if (agree && n <= kJacobsthalEnumerationLimit) {
    agree = closed == count_compositions_ending_odd(n) &&
            closed == static_cast<long>(descending_opposite_parity_sequences(n).size());
  }
  if (!agree) throw std::logic_error("Jacobsthal definitions disagree at n = " + std::to_string(n));
  return closed;
}

TwoColumnPartition make_shape(int c1, int c2) {
  if (c2 < 0 || c1 < c2) throw std::invalid_argument("two-column shape needs c1 >= c2 >= 0");
  return {c1, c2};
}

std::vector<TwoColumnPartition> two_column_partitions(int n) {
  check_nonnegative(n, "two_column_partitions");
  std::vector<TwoColumnPartition> out;
  for (int c2 = 0; 2 * c2 <= n; ++c2) out.push_back({n - c2, c2});
  return out;
}

int Tableau::second_column_top() const { return col2.empty() ? shape.size() + 1 : col2.front(); }

std::vector<Tableau> enumerate_syt(TwoColumnPartition shape) {
  shape = make_shape(shape.c1, shape.c2);
  int const n = shape.size();
  std::vector<Tableau> out;
  Tableau current{shape, {}, {}};
  // Place 1..n in order; a new entry goes at the bottom of a column, and the
  // second column may never be as long as the first.
  auto place = [&](auto&& self, int next) -> void {
    if (next > n) {
      out.push_back(current);
      return;
    }
    if (static_cast<int>(current.col1.size()) < shape.c1) {
      current.col1.push_back(next);
      self(self, next + 1);
      current.col1.pop_back();
    }
    if (current.col2.size() < current.col1.size() && static_cast<int>(current.col2.size()) < shape.c2) {
      current.col2.push_back(next);
      self(self, next + 1);
      current.col2.pop_back();
    }
  };
  place(place, 1);
  std::sort(out.begin(), out.end(), [](Tableau const& a, Tableau const& b) { return a.col2 < b.col2; });
  return out;
}

Integer count_N(TwoColumnPartition shape, int p) {
  if (p < 0 || p > shape.size()) throw std::invalid_argument("count_N needs 0 <= p <= n");
  long count = 0;
  for (auto const& t : enumerate_syt(shape)) {
    if (static_cast<int>(t.col1.size()) < p) continue;
    bool starts = true;
    for (int k = 0; k < p && starts; ++k) starts = t.col1[static_cast<std::size_t>(k)] == k + 1;
    if (starts) ++count;
  }
  return count;
}

Integer multiplicity_by_odd_top(TwoColumnPartition shape) {
  long count = 0;
  for (auto const& t : enumerate_syt(shape))
    if (t.second_column_top() % 2 == 1) ++count;
  return count;
}

Integer multiplicity_by_alternating_N(TwoColumnPartition shape) {
  Integer total = 0;
  for (int k = 0; k <= shape.size(); ++k) {
    Integer nk = count_N(shape, k);
    if (k % 2 == 0) {
      total += nk;
    } else {
      total -= nk;
    }
  }
  return total;
}

Integer theorem_C_multiplicity(TwoColumnPartition shape) {
  Integer odd_top = multiplicity_by_odd_top(shape);
  if (odd_top != multiplicity_by_alternating_N(shape))
    throw std::logic_error("multiplicity routes disagree for shape " + to_string(shape));
  return odd_top;
}

std::string to_string(TwoColumnPartition shape) {
  return "(" + std::to_string(shape.c1) + "," + std::to_string(shape.c2) + ")";
}

}  // namespace tl
