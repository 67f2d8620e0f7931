#pragma once

// The Temperley-Lieb algebra TL_n(a), a = v + v^-1, over Z[v, v^-1].

#include <map>
#include <span>
#include <string>

#include "tl/coeff.hpp"
#include "tl/diagram.hpp"

namespace tl {

/// Sparse LaurentPoly-weighted combination of diagrams on a fixed number
/// of strands. Terms are keyed by diagram in Dyck-lex order; no zero
/// coefficients are stored.
class Element {
 public:
  using TermMap = std::map<Diagram, LaurentPoly>;

  explicit Element(int n = 0) : n_(n) {}
  Element(Diagram const& d, LaurentPoly c = 1);

  static Element one(int n) { return Element(identity(n)); }
  static Element U(int n, int i) { return Element(generator_U(n, i)); }

  int strands() const { return n_; }
  TermMap const& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  LaurentPoly coefficient(Diagram const& d) const;

  void add_term(Diagram const& d, LaurentPoly const& c);

  Element operator-() const;
  Element& operator+=(Element const& y);
  Element& operator-=(Element const& y);
  Element& operator*=(LaurentPoly const& c);
  friend Element operator+(Element x, Element const& y) { return x += y; }
  friend Element operator-(Element x, Element const& y) { return x -= y; }
  friend Element operator*(LaurentPoly const& c, Element x) { return x *= c; }
  friend Element operator*(Element const& x, Element const& y);
  friend bool operator==(Element const& x, Element const& y) = default;

  /// `(c) * word + ...` in Dyck-lex order; `0` for the zero element.
  std::string to_string() const;

 private:
  int n_;
  TermMap terms_;
};

/// Bilinear extension of diagram multiplication with a per erased loop.
Element elt_mul(Element const& x, Element const& y);

/// s_i = lambda + mu U_i.
Element braiding_s(int n, int i, Convention const& c);
/// s_i^-1 = lambda^-1 + mu^-1 U_i.
Element braiding_s_inv(int n, int i, Convention const& c);

/// Coefficient of the identity diagram: the action on the trivial module.
LaurentPoly augment(Element const& x);

enum class GeneratorKind { U, s, s_inv };

/// Left-to-right product of the named generators; the empty word is 1.
Element word_product(int n, std::span<int const> indices, Convention const& c, GeneratorKind kind);

}  // namespace tl
