#include "jordan/rational.hpp"

#include <limits>
#include <numeric>
#include <ostream>

namespace jordan {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

u128 gcd_u128(u128 a, u128 b) {
  if ((a >> 64) == 0 && (b >> 64) == 0)
    return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
  if (a == 0) return b;
  if (b == 0) return a;
  auto ctz = [](u128 v) {
    auto lo = static_cast<std::uint64_t>(v);
    return lo ? __builtin_ctzll(lo) : 64 + __builtin_ctzll(static_cast<std::uint64_t>(v >> 64));
  };
  int shift = ctz(a | b);
  a >>= ctz(a);
  do {
    b >>= ctz(b);
    if (a > b) std::swap(a, b);
    b -= a;
  } while (b != 0);
  return a << shift;
}

u128 abs_u128(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  for (b %= p; e; e >>= 1) {
    if (e & 1) r = static_cast<std::uint64_t>(static_cast<u128>(r) * b % p);
    b = static_cast<std::uint64_t>(static_cast<u128>(b) * b % p);
  }
  return r;
}

bool fits(i128 v) { return v >= -static_cast<i128>(kMax) && v <= static_cast<i128>(kMax); }

mpz_class mpz_from_i128(i128 v) {
  bool neg = v < 0;
  u128 mag = abs_u128(v);
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(mag >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(mag)));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

bool mpz_to_i64(const mpz_class& z, std::int64_t& out) {
  if (!mpz_fits_slong_p(z.get_mpz_t())) return false;
  long v = mpz_get_si(z.get_mpz_t());
  if (v == std::numeric_limits<long>::min()) return false;
  out = v;
  return true;
}

}  // namespace

Rational::Rational(long long num, long long den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  *this = from_i128(num, den);
}

Rational::Rational(const mpq_class& value) { *this = from_big(value); }

void Rational::fix_min() {
  if (num_ == std::numeric_limits<std::int64_t>::min()) {
    mpq_class q{mpz_from_i128(num_)};
    num_ = 0;
    big_ = std::make_shared<const mpq_class>(std::move(q));
  }
}

Rational Rational::from_i128(i128 num, i128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  u128 g = gcd_u128(abs_u128(num), static_cast<u128>(den));
  if (g > 1) {
    num /= static_cast<i128>(g);
    den /= static_cast<i128>(g);
  }
  Rational r;
  if (fits(num) && fits(den)) {
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
  }
  mpq_class q(mpz_from_i128(num), mpz_from_i128(den));
  r.big_ = std::make_shared<const mpq_class>(std::move(q));
  return r;
}

Rational Rational::from_big(mpq_class value) {
  value.canonicalize();
  Rational r;
  std::int64_t n = 0, d = 0;
  if (mpz_to_i64(value.get_num(), n) && mpz_to_i64(value.get_den(), d)) {
    r.num_ = n;
    r.den_ = d;
    return r;
  }
  r.big_ = std::make_shared<const mpq_class>(std::move(value));
  return r;
}

Rational Rational::parse(std::string_view text) {
  auto bad = [&] { return std::invalid_argument("not a rational literal: '" + std::string(text) + "'"); };
  if (text.empty()) throw bad();
  std::string s(text);
  if (s[0] == '+') s.erase(0, 1);
  auto slash = s.find('/');
  auto check_digits = [&](std::string_view part, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !part.empty() && part[0] == '-') i = 1;
    if (i >= part.size()) throw bad();
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') throw bad();
  };
  if (slash == std::string::npos) {
    check_digits(s, true);
    return Rational(mpq_class(mpz_class(s, 10)));
  }
  std::string num = s.substr(0, slash), den = s.substr(slash + 1);
  check_digits(num, true);
  check_digits(den, false);
  mpz_class d(den, 10);
  if (d == 0) throw std::domain_error("Rational: zero denominator in '" + s + "'");
  return Rational(mpq_class(mpz_class(num, 10), d));
}

std::optional<std::uint64_t> Rational::residue(std::uint64_t p) const {
  auto reduce = [p](const mpz_class& z) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
    return static_cast<std::uint64_t>(r.get_ui());
  };
  std::uint64_t n, d;
  if (big_) {
    n = reduce(big_->get_num());
    d = reduce(big_->get_den());
  } else {
    i128 r = static_cast<i128>(num_) % static_cast<i128>(p);
    n = static_cast<std::uint64_t>(r < 0 ? r + p : r);
    d = static_cast<std::uint64_t>(den_) % p;
  }
  if (d == 0) return std::nullopt;
  return static_cast<std::uint64_t>(static_cast<u128>(n) * pow_mod(d, p - 2, p) % p);
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const noexcept {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  mpq_class q(mpz_from_i128(num_), mpz_from_i128(den_));
  return q;
}

std::string Rational::to_string() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::size_t Rational::bit_size() const {
  if (big_)
    return mpz_sizeinbase(big_->get_num_mpz_t(), 2) + mpz_sizeinbase(big_->get_den_mpz_t(), 2);
  auto bits = [](std::int64_t v) {
    std::uint64_t m = v < 0 ? static_cast<std::uint64_t>(-v) : static_cast<std::uint64_t>(v);
    return m == 0 ? std::size_t{1} : static_cast<std::size_t>(64 - __builtin_clzll(m));
  };
  return bits(num_) + bits(den_);
}

Rational Rational::operator-() const {
  if (big_) return from_big(-*big_);
  Rational r = *this;
  r.num_ = -num_;
  return r;
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("Rational: inverse of zero");
  if (big_) return from_big(1 / *big_);
  Rational r;
  r.num_ = num_ < 0 ? -den_ : den_;
  r.den_ = num_ < 0 ? -num_ : num_;
  return r;
}

Rational Rational::big_add(const Rational& a, const Rational& b) {
  return from_big(a.to_mpq() + b.to_mpq());
}

Rational Rational::big_mul(const Rational& a, const Rational& b) {
  return from_big(a.to_mpq() * b.to_mpq());
}

Rational operator+(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    return Rational::big_add(a, b);
  }
  if (a.den_ == 1 && b.den_ == 1) {
    std::int64_t s;
    if (!__builtin_add_overflow(a.num_, b.num_, &s) && s != std::numeric_limits<std::int64_t>::min()) {
      Rational r;
      r.num_ = s;
      return r;
    }
  }
  using i128 = __int128;
  std::int64_t g = std::gcd(a.den_, b.den_);
  i128 num, den;
  if (g == 1) {
    num = static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_;
    den = static_cast<i128>(a.den_) * b.den_;
  } else {
    num = static_cast<i128>(a.num_) * (b.den_ / g) + static_cast<i128>(b.num_) * (a.den_ / g);
    auto g2 = static_cast<std::int64_t>(std::gcd(static_cast<std::uint64_t>(abs_u128(num) % static_cast<u128>(g)),
                                                 static_cast<std::uint64_t>(g)));
    num /= g2;
    den = static_cast<i128>(a.den_ / g) * (b.den_ / g2);
  }
  if (num == 0) return Rational();
  if (fits(num) && fits(den)) {
    Rational r;
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
  }
  return Rational::from_i128(num, den);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  if (a.is_zero() || b.is_zero()) return Rational();
  if (a.big_ || b.big_) return Rational::big_mul(a, b);
  using i128 = __int128;
  std::int64_t g1 = std::gcd(a.num_, b.den_);
  std::int64_t g2 = std::gcd(b.num_, a.den_);
  i128 num = static_cast<i128>(a.num_ / g1) * (b.num_ / g2);
  i128 den = static_cast<i128>(a.den_ / g2) * (b.den_ / g1);
  Rational r;
  if (fits(num) && fits(den)) {
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
  }
  return Rational::from_i128(num, den);
}

Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  // canonical forms: a big value never equals a value that fits inline
  return false;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    using i128 = __int128;
    i128 l = static_cast<i128>(a.num_) * b.den_;
    i128 r = static_cast<i128>(b.num_) * a.den_;
    return l <=> r;
  }
  int c = cmp(a.to_mpq(), b.to_mpq());
  return c <=> 0;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace jordan
