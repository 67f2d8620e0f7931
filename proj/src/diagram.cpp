#include "tl/diagram.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tl {

namespace {

void check_strands(int n) {
  if (n < 0 || n > kMaxStrands)
    throw std::invalid_argument("strand count " + std::to_string(n) + " outside [0, " +
                                std::to_string(kMaxStrands) + "]");
}

// Dyck code of a planar partner table: bit k is 1 iff point k closes its arc.
std::uint64_t dyck_code(std::vector<std::int8_t> const& match) {
  std::uint64_t code = 0;
  for (std::size_t k = 0; k < match.size(); ++k) {
    code <<= 1U;
    if (static_cast<std::size_t>(match[k]) < k) code |= 1U;
  }
  return code;
}

bool is_planar_matching(std::vector<std::int8_t> const& match) {
  std::vector<int> open;
  for (int k = 0; k < static_cast<int>(match.size()); ++k) {
    int p = match[static_cast<std::size_t>(k)];
    if (p < 0 || p >= static_cast<int>(match.size()) || p == k) return false;
    if (match[static_cast<std::size_t>(p)] != k) return false;
    if (p > k) {
      open.push_back(k);
    } else {
      if (open.empty() || open.back() != p) return false;
      open.pop_back();
    }
  }
  return open.empty();
}

void generate_words(int n, int prefix, std::vector<DyckWord>& out) {
  std::string word;
  word.reserve(static_cast<std::size_t>(2 * n));
  // Depth-first with u explored before d yields lexicographic order.
  auto recurse = [&](auto&& self, int ups, int downs) -> void {
    if (ups == n && downs == n) {
      out.emplace_back(word);
      return;
    }
    if (ups < n) {
      word.push_back('u');
      self(self, ups + 1, downs);
      word.pop_back();
    }
    if (downs < ups && ups >= prefix) {
      word.push_back('d');
      self(self, ups, downs + 1);
      word.pop_back();
    }
  };
  recurse(recurse, 0, 0);
}

}  // namespace

DyckWord::DyckWord(std::string letters) : letters_(std::move(letters)) {
  if (!is_valid(letters_)) throw std::invalid_argument("not a Dyck word: '" + letters_ + "'");
}

bool DyckWord::is_valid(std::string_view letters) {
  int height = 0;
  for (char ch : letters) {
    if (ch == 'u') {
      ++height;
    } else if (ch == 'd') {
      if (--height < 0) return false;
    } else {
      return false;
    }
  }
  return height == 0;
}

int DyckWord::first_peak_height() const {
  auto first_d = letters_.find('d');
  return first_d == std::string::npos ? 0 : static_cast<int>(first_d);
}

Diagram::Diagram(int n, std::vector<std::int8_t> match) : n_(n), match_(std::move(match)), code_(dyck_code(match_)) {}

Diagram Diagram::from_pairs(int n, std::vector<std::pair<int, int>> const& arcs) {
  check_strands(n);
  if (static_cast<int>(arcs.size()) != n) throw std::invalid_argument("a diagram on n strands has exactly n arcs");
  std::vector<std::int8_t> match(static_cast<std::size_t>(2 * n), -1);
  for (auto [a, b] : arcs) {
    if (a < 1 || b < 1 || a > 2 * n || b > 2 * n || a == b)
      throw std::invalid_argument("arc endpoint out of range");
    auto& ma = match[static_cast<std::size_t>(a - 1)];
    auto& mb = match[static_cast<std::size_t>(b - 1)];
    if (ma != -1 || mb != -1) throw std::invalid_argument("point used by two arcs");
    ma = static_cast<std::int8_t>(b - 1);
    mb = static_cast<std::int8_t>(a - 1);
  }
  if (!is_planar_matching(match)) throw std::invalid_argument("arcs cross");
  return Diagram(n, std::move(match));
}

std::vector<std::pair<int, int>> Diagram::arcs() const {
  std::vector<std::pair<int, int>> out;
  for (int k = 0; k < 2 * n_; ++k) {
    int p = match_[static_cast<std::size_t>(k)];
    if (p > k) out.emplace_back(k + 1, p + 1);
  }
  return out;
}

int Diagram::through_strands() const {
  int count = 0;
  for (int k = 0; k < n_; ++k)
    if (match_[static_cast<std::size_t>(k)] >= n_) ++count;
  return count;
}

std::string Diagram::verbose() const {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (auto [a, b] : arcs()) {
    if (!first) out << ',';
    first = false;
    out << '(' << a << ',' << b << ')';
  }
  out << '}';
  return out.str();
}

Diagram identity(int n) {
  check_strands(n);
  std::vector<std::pair<int, int>> arcs;
  for (int i = 1; i <= n; ++i) arcs.emplace_back(Diagram::right_point(n, i), Diagram::left_point(n, i));
  return Diagram::from_pairs(n, arcs);
}

Diagram generator_U(int n, int i) {
  check_strands(n);
  if (i < 1 || i > n - 1)
    throw std::out_of_range("U_" + std::to_string(i) + " is not a generator of TL_" + std::to_string(n));
  std::vector<std::pair<int, int>> arcs;
  arcs.emplace_back(Diagram::right_point(n, i), Diagram::right_point(n, i + 1));
  arcs.emplace_back(Diagram::left_point(n, i), Diagram::left_point(n, i + 1));
  for (int j = 1; j <= n; ++j)
    if (j != i && j != i + 1) arcs.emplace_back(Diagram::right_point(n, j), Diagram::left_point(n, j));
  return Diagram::from_pairs(n, arcs);
}

MulResult multiply(Diagram const& x, Diagram const& y) {
  if (x.n_ != y.n_) throw std::invalid_argument("strand-count mismatch in diagram product");
  int const n = x.n_;
  auto const& mx = x.match_;
  auto const& my = y.match_;
  // Middle wall: x's right dot k+1 (x point k) is glued to y's left dot k+1
  // (y point 2n-1-k). Both sides use 0-based points below.
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<std::int8_t> out(static_cast<std::size_t>(2 * n), -1);

  // Walks from a boundary point of the result until it exits again.
  auto trace = [&](bool in_x, int point) -> int {
    for (;;) {
      if (in_x) {
        int q = mx[static_cast<std::size_t>(point)];
        if (q >= n) return q;  // x's left dot: result left dot, same numbering
        seen[static_cast<std::size_t>(q)] = 1;
        point = 2 * n - 1 - q;
        in_x = false;
      } else {
        int q = my[static_cast<std::size_t>(point)];
        if (q < n) return q;  // y's right dot: result right dot
        int mid = 2 * n - 1 - q;
        seen[static_cast<std::size_t>(mid)] = 1;
        point = mid;
        in_x = true;
      }
    }
  };

  for (int p = n; p < 2 * n; ++p) {
    if (out[static_cast<std::size_t>(p)] != -1) continue;
    int q = trace(true, p);
    out[static_cast<std::size_t>(p)] = static_cast<std::int8_t>(q);
    out[static_cast<std::size_t>(q)] = static_cast<std::int8_t>(p);
  }
  for (int p = 0; p < n; ++p) {
    if (out[static_cast<std::size_t>(p)] != -1) continue;
    int q = trace(false, p);
    out[static_cast<std::size_t>(p)] = static_cast<std::int8_t>(q);
    out[static_cast<std::size_t>(q)] = static_cast<std::int8_t>(p);
  }

  int loops = 0;
  for (int k = 0; k < n; ++k) {
    if (seen[static_cast<std::size_t>(k)]) continue;
    ++loops;
    int mid = k;
    do {
      seen[static_cast<std::size_t>(mid)] = 1;
      int q = my[static_cast<std::size_t>(2 * n - 1 - mid)];  // y's left dot partner, also a left dot
      int next = 2 * n - 1 - q;
      seen[static_cast<std::size_t>(next)] = 1;
      mid = mx[static_cast<std::size_t>(next)];  // x's right dot partner, also a right dot
    } while (mid != k);
  }
  return {Diagram(n, std::move(out)), loops};
}

DyckWord to_dyck(Diagram const& x) {
  std::string letters;
  letters.reserve(static_cast<std::size_t>(2 * x.strands()));
  for (int p = 1; p <= 2 * x.strands(); ++p) letters.push_back(x.partner(p) > p ? 'u' : 'd');
  return DyckWord(std::move(letters));
}

Diagram from_dyck(DyckWord const& w) {
  int const n = w.semilength();
  check_strands(n);
  std::vector<std::int8_t> match(static_cast<std::size_t>(2 * n), -1);
  std::vector<int> open;
  for (int k = 0; k < 2 * n; ++k) {
    if (w.str()[static_cast<std::size_t>(k)] == 'u') {
      open.push_back(k);
    } else {
      int p = open.back();
      open.pop_back();
      match[static_cast<std::size_t>(p)] = static_cast<std::int8_t>(k);
      match[static_cast<std::size_t>(k)] = static_cast<std::int8_t>(p);
    }
  }
  return Diagram(n, std::move(match));
}

Diagram from_dyck(std::string_view letters) { return from_dyck(DyckWord(std::string(letters))); }

std::vector<DyckWord> enumerate_dyck_words(int n) { return enumerate_dyck_words_with_prefix(n, 0); }

std::vector<DyckWord> enumerate_dyck_words_with_prefix(int n, int m) {
  if (n < 0) throw std::invalid_argument("negative semilength");
  std::vector<DyckWord> out;
  if (m > n) return out;
  generate_words(n, m, out);
  return out;
}

std::vector<Diagram> enumerate_diagrams(int n) {
  check_strands(n);
  std::vector<Diagram> out;
  for (auto const& w : enumerate_dyck_words(n)) out.push_back(from_dyck(w));
  return out;
}

}  // namespace tl
