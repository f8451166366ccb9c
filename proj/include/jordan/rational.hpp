#ifndef JORDAN_RATIONAL_HPP
#define JORDAN_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace jordan {

/// Exact element of Q, always kept in lowest terms with a positive denominator.
///
/// Values whose numerator and denominator fit in 63 bits are stored inline and
/// combined with 128-bit intermediates; anything larger is promoted to a shared,
/// immutable GMP rational. Results are demoted back to the inline form whenever
/// they fit again, so equality is a structural comparison of the canonical form.
class Rational {
public:
  Rational() noexcept = default;
  Rational(int value) noexcept : num_(value) {}
  Rational(long value) noexcept : num_(value) { fix_min(); }
  Rational(long long value) noexcept : num_(value) { fix_min(); }
  Rational(long long num, long long den);
  explicit Rational(const mpq_class& value);

  /// Accepts "3", "-7", "1/2", "-3/4" (optional leading '+').
  static Rational parse(std::string_view text);

  bool is_zero() const noexcept { return !big_ && num_ == 0; }
  bool is_one() const noexcept { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const;
  int sign() const noexcept;

  mpq_class to_mpq() const;
  std::string to_string() const;
  /// Bits needed for numerator plus denominator; used by coefficient-growth guards.
  std::size_t bit_size() const;
  /// Image in Z/p for a prime p < 2^63; empty when p divides the denominator.
  std::optional<std::uint64_t> residue(std::uint64_t p) const;

  Rational operator-() const;
  Rational inverse() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
  using i128 = __int128;

  void fix_min();
  static Rational from_i128(i128 num, i128 den);
  static Rational from_big(mpq_class value);
  static Rational big_add(const Rational& a, const Rational& b);
  static Rational big_mul(const Rational& a, const Rational& b);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace jordan

#endif
