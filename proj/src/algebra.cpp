#include "tl/algebra.hpp"

#include <sstream>
#include <stdexcept>

namespace tl {

Element::Element(Diagram const& d, LaurentPoly c) : n_(d.strands()) {
  if (!c.is_zero()) terms_.emplace(d, std::move(c));
}

LaurentPoly Element::coefficient(Diagram const& d) const {
  auto it = terms_.find(d);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void Element::add_term(Diagram const& d, LaurentPoly const& c) {
  if (d.strands() != n_) throw std::invalid_argument("strand mismatch when adding a term");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(d, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Element Element::operator-() const {
  Element r = *this;
  for (auto& [d, c] : r.terms_) c = -c;
  return r;
}

Element& Element::operator+=(Element const& y) {
  if (y.n_ != n_) throw std::invalid_argument("strand mismatch in element sum");
  for (auto const& [d, c] : y.terms_) add_term(d, c);
  return *this;
}

Element& Element::operator-=(Element const& y) { return *this += -y; }

Element& Element::operator*=(LaurentPoly const& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [d, coeff] : terms_) coeff *= c;
  return *this;
}

Element operator*(Element const& x, Element const& y) {
  if (x.n_ != y.n_) throw std::invalid_argument("strand mismatch in element product");
  static LaurentPoly const a = LaurentPoly::loop_value();
  Element r(x.n_);
  for (auto const& [dx, cx] : x.terms_)
    for (auto const& [dy, cy] : y.terms_) {
      auto [d, loops] = multiply(dx, dy);
      LaurentPoly c = cx * cy;
      if (loops > 0) c *= a.pow(static_cast<unsigned>(loops));
      r.add_term(d, c);
    }
  return r;
}

std::string Element::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto const& [d, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << '(' << c.to_string() << ") * " << to_dyck(d).str();
  }
  return out.str();
}

Element elt_mul(Element const& x, Element const& y) { return x * y; }

Element braiding_s(int n, int i, Convention const& c) {
  Element s = c.mu * Element::U(n, i);
  s += c.lambda * Element::one(n);
  return s;
}

Element braiding_s_inv(int n, int i, Convention const& c) {
  Element s = c.mu.unit_inverse() * Element::U(n, i);
  s += c.lambda.unit_inverse() * Element::one(n);
  return s;
}

LaurentPoly augment(Element const& x) { return x.coefficient(identity(x.strands())); }

Element word_product(int n, std::span<int const> indices, Convention const& c, GeneratorKind kind) {
  Element r = Element::one(n);
  for (int i : indices) {
    switch (kind) {
      case GeneratorKind::U:
        r = r * Element::U(n, i);
        break;
      case GeneratorKind::s:
        r = r * braiding_s(n, i, c);
        break;
      case GeneratorKind::s_inv:
        r = r * braiding_s_inv(n, i, c);
        break;
    }
  }
  return r;
}

}  // namespace tl
