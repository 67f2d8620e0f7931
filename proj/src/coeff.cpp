#include "tl/coeff.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace tl {

namespace {

Integer parse_integer(std::string_view digits, std::string_view context) {
  if (digits.empty() ||
      !std::all_of(digits.begin(), digits.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
    throw std::invalid_argument("malformed integer in '" + std::string(context) + "'");
  return Integer(std::string(digits));
}

int parse_exponent(std::string_view text, std::string_view context) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  Integer e = parse_integer(text, context);
  if (!e.fits_sint_p()) throw std::invalid_argument("exponent out of range in '" + std::string(context) + "'");
  int value = static_cast<int>(e.get_si());
  return negative ? -value : value;
}

}  // namespace

LaurentPoly::LaurentPoly(long c) : LaurentPoly(Integer(c)) {}

LaurentPoly::LaurentPoly(Integer c) {
  if (c != 0) terms_.emplace_back(0, std::move(c));
}

LaurentPoly LaurentPoly::monomial(Integer c, int exponent) {
  LaurentPoly p;
  if (c != 0) p.terms_.emplace_back(exponent, std::move(c));
  return p;
}

LaurentPoly LaurentPoly::loop_value() { return v() + v_inv(); }

bool LaurentPoly::is_one() const { return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1; }

Integer LaurentPoly::coefficient(int exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](Term const& t, int e) { return t.first < e; });
  if (it != terms_.end() && it->first == exponent) return it->second;
  return 0;
}

int LaurentPoly::min_exponent() const {
  if (is_zero()) throw std::domain_error("zero polynomial has no exponents");
  return terms_.front().first;
}

int LaurentPoly::max_exponent() const {
  if (is_zero()) throw std::domain_error("zero polynomial has no exponents");
  return terms_.back().first;
}

bool LaurentPoly::is_unit() const {
  return terms_.size() == 1 && (terms_[0].second == 1 || terms_[0].second == -1);
}

LaurentPoly LaurentPoly::unit_inverse() const {
  if (!is_unit()) throw std::domain_error("not a unit of Z[v, v^-1]: " + to_string());
  return monomial(terms_[0].second, -terms_[0].first);
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
  LaurentPoly result(1);
  LaurentPoly base = *this;
  while (k != 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k != 0) base = base * base;
  }
  return result;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(LaurentPoly const& q) {
  if (q.is_zero()) return *this;
  if (is_zero()) return *this = q;
  std::vector<Term> out;
  out.reserve(terms_.size() + q.terms_.size());
  auto a = terms_.begin();
  auto b = q.terms_.begin();
  while (a != terms_.end() || b != q.terms_.end()) {
    if (b == q.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      out.push_back(*b++);
    } else {
      Integer c = a->second + b->second;
      if (c != 0) out.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(LaurentPoly const& q) { return *this += -q; }

LaurentPoly operator*(LaurentPoly const& p, LaurentPoly const& q) {
  LaurentPoly r;
  r.add_product(p, q);
  return r;
}

LaurentPoly& LaurentPoly::operator*=(LaurentPoly const& q) { return *this = *this * q; }

void LaurentPoly::add_product(LaurentPoly const& p, LaurentPoly const& q) {
  if (p.is_zero() || q.is_zero()) return;
  // Dense accumulation over the exponent window of p*q.
  int lo = p.terms_.front().first + q.terms_.front().first;
  int hi = p.terms_.back().first + q.terms_.back().first;
  if (!is_zero()) {
    lo = std::min(lo, terms_.front().first);
    hi = std::max(hi, terms_.back().first);
  }
  std::vector<Integer> acc(static_cast<std::size_t>(hi - lo + 1));
  for (auto& [e, c] : terms_) acc[static_cast<std::size_t>(e - lo)] = std::move(c);
  for (auto const& [ep, cp] : p.terms_)
    for (auto const& [eq, cq] : q.terms_) {
      Integer& slot = acc[static_cast<std::size_t>(ep + eq - lo)];
      mpz_addmul(slot.get_mpz_t(), cp.get_mpz_t(), cq.get_mpz_t());
    }
  terms_.clear();
  for (std::size_t i = 0; i < acc.size(); ++i)
    if (acc[i] != 0) terms_.emplace_back(lo + static_cast<int>(i), std::move(acc[i]));
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    auto const& [e, c] = *it;
    bool negative = c < 0;
    Integer magnitude = abs(c);
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      out << magnitude.get_str();
    } else {
      if (magnitude != 1) out << magnitude.get_str() << '*';
      out << "v^" << e;
    }
  }
  return out.str();
}

LaurentPoly LaurentPoly::parse(std::string_view text) {
  std::string compact;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) compact.push_back(ch);
  if (compact.empty()) throw std::invalid_argument("empty polynomial text");
  if (compact.size() >= 2 && compact.front() == '(' && compact.back() == ')')
    compact = compact.substr(1, compact.size() - 2);

  // Split into signed terms; a sign directly after '^' belongs to an exponent.
  std::vector<std::string_view> pieces;
  std::string_view all(compact);
  std::size_t start = 0;
  for (std::size_t i = 1; i < all.size(); ++i) {
    if ((all[i] == '+' || all[i] == '-') && all[i - 1] != '^') {
      pieces.push_back(all.substr(start, i - start));
      start = i;
    }
  }
  pieces.push_back(all.substr(start));

  LaurentPoly result;
  for (std::string_view piece : pieces) {
    std::string_view body = piece;
    bool negative = false;
    if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
      negative = body.front() == '-';
      body.remove_prefix(1);
    }
    if (body.empty()) throw std::invalid_argument("dangling sign in '" + compact + "'");
    Integer c = 1;
    int e = 0;
    auto vpos = body.find('v');
    if (vpos == std::string_view::npos) {
      c = parse_integer(body, compact);
    } else {
      std::string_view coeff = body.substr(0, vpos);
      if (!coeff.empty()) {
        if (coeff.back() != '*') throw std::invalid_argument("expected '*' before v in '" + compact + "'");
        coeff.remove_suffix(1);
        c = parse_integer(coeff, compact);
      }
      std::string_view rest = body.substr(vpos + 1);
      if (rest.empty()) {
        e = 1;
      } else {
        if (rest.front() != '^') throw std::invalid_argument("expected '^' after v in '" + compact + "'");
        e = parse_exponent(rest.substr(1), compact);
      }
    }
    result += monomial(negative ? Integer(-c) : c, e);
  }
  return result;
}

LaurentPoly poly_add(LaurentPoly const& p, LaurentPoly const& q) { return p + q; }
LaurentPoly poly_mul(LaurentPoly const& p, LaurentPoly const& q) { return p * q; }

Rational specialize(LaurentPoly const& p, Rational const& x) {
  if (x == 0) throw std::domain_error("v must be a unit");
  Rational result = 0;
  for (auto const& [e, c] : p.terms()) {
    Rational power = 1;
    Rational base = e >= 0 ? x : Rational(1) / x;
    unsigned k = static_cast<unsigned>(e >= 0 ? e : -e);
    mpz_pow_ui(power.get_num_mpz_t(), base.get_num_mpz_t(), k);
    mpz_pow_ui(power.get_den_mpz_t(), base.get_den_mpz_t(), k);
    result += Rational(c) * power;
  }
  result.canonicalize();
  return result;
}

std::string to_string(Rational const& x) { return x.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  auto check = [&](std::string_view part) {
    if (!part.empty() && (part.front() == '-' || part.front() == '+')) part.remove_prefix(1);
    parse_integer(part, s);
  };
  check(std::string_view(s).substr(0, slash));
  if (slash != std::string::npos) {
    std::string_view den = std::string_view(s).substr(slash + 1);
    parse_integer(den, s);
    if (Integer(std::string(den)) == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  }
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  Rational r(s);
  r.canonicalize();
  return r;
}

Convention Convention::make(ConventionTag tag) {
  if (tag == ConventionTag::A) return {tag, LaurentPoly(-1), LaurentPoly::v()};
  return {tag, LaurentPoly::monomial(1, 2), LaurentPoly::monomial(-1, 1)};
}

LaurentPoly mu_over_lambda(Convention const& c) { return c.mu * c.lambda.unit_inverse(); }

}  // namespace tl
