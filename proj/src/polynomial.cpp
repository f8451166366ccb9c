#include "jordan/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace jordan {

Monomial Monomial::variable(std::size_t i) {
  if (i >= kMaxVariables) throw std::out_of_range("Monomial: too many variables");
  Monomial m;
  m.exp[i] = 1;
  m.degree = 1;
  return m;
}

bool Monomial::divides(const Monomial& o) const {
  if (degree > o.degree) return false;
  for (std::size_t i = 0; i < kMaxVariables; ++i)
    if (exp[i] > o.exp[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& o) const {
  for (std::size_t i = 0; i < kMaxVariables; ++i)
    if (exp[i] && o.exp[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVariables; ++i) m.exp[i] = static_cast<std::uint16_t>(exp[i] + o.exp[i]);
  m.degree = degree + o.degree;
  return m;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVariables; ++i) m.exp[i] = static_cast<std::uint16_t>(exp[i] - o.exp[i]);
  m.degree = degree - o.degree;
  return m;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    m.exp[i] = std::max(a.exp[i], b.exp[i]);
    m.degree += m.exp[i];
  }
  return m;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (a.degree != b.degree) return a.degree <=> b.degree;
  for (std::size_t i = kMaxVariables; i-- > 0;)
    if (a.exp[i] != b.exp[i]) return b.exp[i] <=> a.exp[i];
  return std::strong_ordering::equal;
}

Polynomial Polynomial::constant(const Rational& c) {
  Polynomial p;
  if (!c.is_zero()) p.terms_.push_back({Monomial{}, c});
  return p;
}

Polynomial Polynomial::variable(std::size_t i) { return term(1, Monomial::variable(i)); }

Polynomial Polynomial::term(const Rational& c, const Monomial& m) {
  Polynomial p;
  if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

std::size_t Polynomial::max_coefficient_bits() const {
  std::size_t b = 0;
  for (const auto& t : terms_) b = std::max(b, t.coeff.bit_size());
  return b;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Rational inv = leading_coeff().inverse();
  Polynomial p(*this);
  for (auto& t : p.terms_) t.coeff *= inv;
  return p;
}

Polynomial Polynomial::scaled(const Rational& c, const Monomial& m) const {
  Polynomial p;
  if (c.is_zero()) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.monomial * m, t.coeff * c});
  return p;
}

Polynomial Polynomial::minus_scaled(const Rational& c, const Monomial& m, const Polynomial& g) const {
  Polynomial r;
  r.terms_.reserve(terms_.size() + g.terms_.size());
  auto a = terms_.begin();
  auto b = g.terms_.begin();
  while (a != terms_.end() || b != g.terms_.end()) {
    if (b == g.terms_.end()) {
      r.terms_.push_back(*a++);
      continue;
    }
    Monomial bm = b->monomial * m;
    if (a == terms_.end()) {
      r.terms_.push_back({bm, -(c * b->coeff)});
      ++b;
      continue;
    }
    auto cmp = a->monomial <=> bm;
    if (cmp > 0) {
      r.terms_.push_back(*a++);
    } else if (cmp < 0) {
      r.terms_.push_back({bm, -(c * b->coeff)});
      ++b;
    } else {
      Rational v = a->coeff - c * b->coeff;
      if (!v.is_zero()) r.terms_.push_back({bm, v});
      ++a;
      ++b;
    }
  }
  return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) { return a.minus_scaled(-1, Monomial{}, b); }

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a.minus_scaled(1, Monomial{}, b); }

Polynomial operator*(const Rational& c, const Polynomial& p) { return p.scaled(c, Monomial{}); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r;
  for (const auto& t : b.terms_) r = r + a.scaled(t.coeff, t.monomial);
  return r;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].monomial == b.terms_[i].monomial) || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  return true;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    if (!first) {
      os << (c.sign() < 0 ? " - " : " + ");
      if (c.sign() < 0) c = -c;
    } else if (c.sign() < 0 && t.monomial.degree > 0) {
      os << "-";
      c = -c;
    }
    first = false;
    bool unit = c.is_one() && t.monomial.degree > 0;
    if (!unit) os << c;
    bool need_star = !unit;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      if (!t.monomial.exp[i]) continue;
      if (need_star) os << "*";
      os << (i < names.size() ? names[i] : "x" + std::to_string(i));
      if (t.monomial.exp[i] > 1) os << "^" << t.monomial.exp[i];
      need_star = true;
    }
  }
  return os.str();
}

}  // namespace jordan
