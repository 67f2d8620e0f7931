#include "tl/linalg.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace tl {

namespace {

using IntVec = std::vector<std::pair<std::size_t, Integer>>;

void make_primitive(IntVec& v) {
  if (v.empty()) return;
  Integer g = 0;
  for (auto const& [r, c] : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) return;
  }
  for (auto& [r, c] : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

// Clears denominators of a rational column and makes it primitive.
IntVec integer_column(std::vector<std::pair<std::size_t, Rational>> const& col) {
  Integer den = 1;
  for (auto const& [r, q] : col) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  IntVec v;
  v.reserve(col.size());
  for (auto const& [r, q] : col) {
    Integer c = den / q.get_den();
    c *= q.get_num();
    v.emplace_back(r, std::move(c));
  }
  make_primitive(v);
  return v;
}

// Row echelon form by integer column operations; each incoming column is
// reduced against the stored pivot columns keyed by their leading row.
class EchelonBuilder {
 public:
  explicit EchelonBuilder(std::size_t rows) : pivots_(rows) {}

  // Returns true when v is independent of the columns inserted so far.
  bool insert(IntVec v) {
    IntVec scratch;
    while (!v.empty()) {
      std::size_t lead = v.front().first;
      auto& slot = pivots_[lead];
      if (slot.empty()) {
        slot = std::move(v);
        ++rank_;
        return true;
      }
      Integer a = slot.front().second;
      Integer b = v.front().second;
      Integer g = gcd(a, b);
      mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
      mpz_divexact(b.get_mpz_t(), b.get_mpz_t(), g.get_mpz_t());
      // v <- a*v - b*slot; the leading entries cancel.
      scratch.clear();
      auto x = v.begin() + 1;
      auto y = slot.begin() + 1;
      while (x != v.end() || y != slot.end()) {
        if (y == slot.end() || (x != v.end() && x->first < y->first)) {
          scratch.emplace_back(x->first, a * x->second);
          ++x;
        } else if (x == v.end() || y->first < x->first) {
          scratch.emplace_back(y->first, -b * y->second);
          ++y;
        } else {
          Integer c = a * x->second;
          mpz_submul(c.get_mpz_t(), b.get_mpz_t(), y->second.get_mpz_t());
          if (c != 0) scratch.emplace_back(x->first, std::move(c));
          ++x;
          ++y;
        }
      }
      std::swap(v, scratch);
      make_primitive(v);
    }
    return false;
  }

  std::size_t rank() const { return rank_; }

 private:
  std::vector<IntVec> pivots_;
  std::size_t rank_ = 0;
};

}  // namespace

void PolyMatrix::set_column(std::size_t c, Column col) {
  if (c >= columns_.size()) throw std::out_of_range("column index out of range");
  for (std::size_t k = 0; k < col.size(); ++k) {
    if (col[k].first >= rows_) throw std::out_of_range("row index out of range");
    if (k > 0 && col[k - 1].first >= col[k].first) throw std::invalid_argument("column rows must be increasing");
    if (col[k].second.is_zero()) throw std::invalid_argument("explicit zero in sparse column");
  }
  columns_[c] = std::move(col);
}

LaurentPoly PolyMatrix::entry(std::size_t r, std::size_t c) const {
  auto const& col = columns_.at(c);
  auto it = std::lower_bound(col.begin(), col.end(), r, [](auto const& e, std::size_t row) { return e.first < row; });
  if (it != col.end() && it->first == r) return it->second;
  return {};
}

std::size_t PolyMatrix::nonzeros() const {
  std::size_t total = 0;
  for (auto const& col : columns_) total += col.size();
  return total;
}

bool PolyMatrix::is_zero() const { return nonzeros() == 0; }

PolyMatrix PolyMatrix::identity(std::size_t k) {
  PolyMatrix m(k, k);
  for (std::size_t i = 0; i < k; ++i) m.columns_[i].emplace_back(i, LaurentPoly(1));
  return m;
}

PolyMatrix compose(PolyMatrix const& a, PolyMatrix const& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("shape mismatch in matrix product");
  PolyMatrix out(a.rows(), b.cols());
  std::map<std::size_t, LaurentPoly> acc;
  for (std::size_t c = 0; c < b.cols(); ++c) {
    acc.clear();
    for (auto const& [k, bk] : b.column(c))
      for (auto const& [r, ark] : a.column(k)) acc[r].add_product(ark, bk);
    PolyMatrix::Column col;
    for (auto& [r, value] : acc)
      if (!value.is_zero()) col.emplace_back(r, std::move(value));
    out.set_column(c, std::move(col));
  }
  return out;
}

std::optional<EntryDiff> first_difference(PolyMatrix const& a, PolyMatrix const& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("shape mismatch in comparison");
  for (std::size_t c = 0; c < a.cols(); ++c) {
    auto const& x = a.column(c);
    auto const& y = b.column(c);
    if (x == y) continue;
    std::size_t k = 0;
    while (k < x.size() && k < y.size() && x[k] == y[k]) ++k;
    std::size_t row;
    if (k == x.size()) {
      row = y[k].first;
    } else if (k == y.size()) {
      row = x[k].first;
    } else {
      row = std::min(x[k].first, y[k].first);
    }
    return EntryDiff{row, c, a.entry(row, c), b.entry(row, c)};
  }
  return std::nullopt;
}

std::size_t rank(RationalMatrix const& m) {
  EchelonBuilder echelon(m.rows());
  std::vector<std::pair<std::size_t, Rational>> col;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    col.clear();
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (m(r, c) != 0) col.emplace_back(r, m(r, c));
    echelon.insert(integer_column(col));
  }
  return echelon.rank();
}

std::vector<std::vector<std::pair<std::size_t, Integer>>> specialize_columns(PolyMatrix const& m,
                                                                             Rational const& x) {
  if (x == 0) throw std::domain_error("v must be a unit");
  std::vector<IntVec> out;
  out.reserve(m.cols());
  std::vector<std::pair<std::size_t, Rational>> col;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    col.clear();
    for (auto const& [r, p] : m.column(c)) {
      Rational value = specialize(p, x);
      if (value != 0) col.emplace_back(r, std::move(value));
    }
    out.push_back(integer_column(col));
  }
  return out;
}

std::size_t rank_at(PolyMatrix const& m, Rational const& x) {
  EchelonBuilder echelon(m.rows());
  for (auto& col : specialize_columns(m, x)) echelon.insert(std::move(col));
  return echelon.rank();
}

}  // namespace tl
