#ifndef JORDAN_POLYNOMIAL_HPP
#define JORDAN_POLYNOMIAL_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "jordan/rational.hpp"

namespace jordan {

inline constexpr std::size_t kMaxVariables = 16;

/// Exponent vector ordered by degree reverse lexicographic order.
struct Monomial {
  std::array<std::uint16_t, kMaxVariables> exp{};
  std::uint32_t degree = 0;

  static Monomial variable(std::size_t i);
  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  Monomial operator*(const Monomial& o) const;
  /// this / o; requires o.divides(*this).
  Monomial operator/(const Monomial& o) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exp == b.exp; }
  /// degrevlex: higher total degree wins; on ties the monomial with the
  /// smaller exponent in the last differing variable is larger.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);
};

struct Term {
  Monomial monomial;
  Rational coeff;
};

/// Sparse polynomial over Q with terms kept in strictly decreasing monomial order.
class Polynomial {
public:
  Polynomial() = default;
  static Polynomial constant(const Rational& c);
  static Polynomial variable(std::size_t i);
  static Polynomial term(const Rational& c, const Monomial& m);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.degree == 0); }
  const std::vector<Term>& terms() const { return terms_; }
  const Monomial& leading_monomial() const { return terms_.front().monomial; }
  const Rational& leading_coeff() const { return terms_.front().coeff; }
  std::size_t size() const { return terms_.size(); }
  std::size_t max_coefficient_bits() const;

  Polynomial monic() const;
  /// c * m * this
  Polynomial scaled(const Rational& c, const Monomial& m) const;
  /// this - c * m * g, computed in one merge
  Polynomial minus_scaled(const Rational& c, const Monomial& m, const Polynomial& g) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, const Polynomial& p);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  std::string to_string(const std::vector<std::string>& names) const;

private:
  std::vector<Term> terms_;
};

/// Polynomials over a shared, ordered variable list (degrevlex on that order).
struct PolySystem {
  std::vector<std::string> variables;
  std::vector<Polynomial> polynomials;
};

}  // namespace jordan

#endif
