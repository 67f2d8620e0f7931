#pragma once

// Planar diagrams on n strands as noncrossing perfect matchings.
//
// Boundary numbering (1-based points): the right dots are points 1..n from
// bottom to top, then the left dots are points n+1..2n from top to bottom,
// so left dot i is point 2n+1-i. Reading points 1..2n in order and writing
// `u` at the first visit of an arc and `d` at the second gives the Dyck word.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tl {

/// Largest strand count supported (the Dyck word must fit in 64 bits).
inline constexpr int kMaxStrands = 32;

class DyckWord {
 public:
  DyckWord() = default;
  /// Throws std::invalid_argument unless `letters` is a Dyck word over {u, d}.
  explicit DyckWord(std::string letters);

  static bool is_valid(std::string_view letters);

  std::string const& str() const { return letters_; }
  int semilength() const { return static_cast<int>(letters_.size() / 2); }
  /// Height of the first peak (number of leading u's); 0 for the empty word.
  int first_peak_height() const;

  friend auto operator<=>(DyckWord const&, DyckWord const&) = default;

 private:
  std::string letters_;
};

struct MulResult;

class Diagram {
 public:
  /// The empty diagram on 0 strands.
  Diagram() = default;
  /// From arcs given as 1-based point pairs. Throws std::invalid_argument
  /// unless they form a noncrossing perfect matching of 1..2n.
  static Diagram from_pairs(int n, std::vector<std::pair<int, int>> const& arcs);

  int strands() const { return n_; }
  /// Partner of a 1-based boundary point.
  int partner(int point) const { return match_[static_cast<std::size_t>(point - 1)] + 1; }
  static int right_point(int /*n*/, int dot) { return dot; }
  static int left_point(int n, int dot) { return 2 * n + 1 - dot; }

  /// Dyck word bits, MSB first, u = 0, d = 1. Orders diagrams Dyck-lex.
  std::uint64_t code() const { return code_; }
  /// Arcs as sorted 1-based point pairs (a < b).
  std::vector<std::pair<int, int>> arcs() const;
  /// Number of arcs joining a left dot to a right dot.
  int through_strands() const;

  friend bool operator==(Diagram const& x, Diagram const& y) { return x.n_ == y.n_ && x.code_ == y.code_; }
  friend std::strong_ordering operator<=>(Diagram const& x, Diagram const& y) {
    if (auto c = x.n_ <=> y.n_; c != 0) return c;
    return x.code_ <=> y.code_;
  }

  std::string verbose() const;

 private:
  friend MulResult multiply(Diagram const& x, Diagram const& y);
  friend Diagram from_dyck(DyckWord const& w);
  // Takes a 0-based partner table already known to be planar.
  Diagram(int n, std::vector<std::int8_t> match);

  int n_ = 0;
  std::vector<std::int8_t> match_;  // 0-based partner table of size 2n
  std::uint64_t code_ = 0;
};

struct MulResult {
  Diagram diagram;
  int loops = 0;
};

Diagram identity(int n);
/// U_i: cups on dots i, i+1 on both sides. Requires 1 <= i <= n-1.
Diagram generator_U(int n, int i);
/// Glues x's right dots to y's left dots (x drawn on the left).
MulResult multiply(Diagram const& x, Diagram const& y);

DyckWord to_dyck(Diagram const& x);
Diagram from_dyck(DyckWord const& w);
Diagram from_dyck(std::string_view letters);

/// All Dyck words of semilength n, lexicographic with u < d.
std::vector<DyckWord> enumerate_dyck_words(int n);
/// Dyck words of semilength n starting with at least m u's, same order.
std::vector<DyckWord> enumerate_dyck_words_with_prefix(int n, int m);
/// All diagrams on n strands in Dyck-lex order.
std::vector<Diagram> enumerate_diagrams(int n);

}  // namespace tl

template <>
struct std::hash<tl::Diagram> {
  std::size_t operator()(tl::Diagram const& d) const noexcept {
    return std::hash<std::uint64_t>{}(d.code() * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(d.strands()));
  }
};
