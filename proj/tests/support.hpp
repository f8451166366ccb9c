#ifndef JORDAN_TESTS_SUPPORT_HPP
#define JORDAN_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "jordan/algebra.hpp"
#include "jordan/catalog.hpp"

namespace testing {

inline const jordan::Catalog& catalog() {
  static const jordan::Catalog cat = jordan::Catalog::load_directory(JORDAN_CATALOG_DIR);
  return cat;
}

inline const jordan::Algebra& alg(const std::string& name) { return catalog().algebra(name); }

/// Single inline entry in catalog syntax, resolved against the shipped catalog.
inline jordan::Algebra from_text(const std::string& text) {
  auto entries = jordan::parse_catalog(text, "<test>");
  jordan::Environment env;
  for (const auto& e : catalog().entries()) env.emplace(e.name, catalog().algebra(e.name));
  return jordan::resolve(entries.back(), env);
}

inline jordan::Element vec(std::initializer_list<jordan::Rational> xs) { return jordan::Element(xs); }

class Gen {
public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long long integer(long long lo, long long hi) { return std::uniform_int_distribution<long long>(lo, hi)(rng_); }

  jordan::Rational rational(long long bound = 5) {
    long long den = integer(1, bound);
    return jordan::Rational(integer(-bound, bound), den);
  }

  jordan::Element element(std::size_t n, long long bound = 5) {
    jordan::Element v(n);
    for (auto& c : v) c = rational(bound);
    return v;
  }

  jordan::Matrix matrix(std::size_t rows, std::size_t cols, long long bound = 3) {
    jordan::Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = jordan::Rational(integer(-bound, bound));
    return m;
  }

  /// Unimodular-ish integer change of basis; retried until invertible.
  jordan::Matrix invertible(std::size_t n, long long bound = 2) {
    for (;;) {
      jordan::Matrix m = matrix(n, n, bound);
      if (jordan::inverse(m)) return m;
    }
  }

  std::vector<std::size_t> permutation(std::size_t n) {
    std::vector<std::size_t> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = i;
    std::shuffle(p.begin(), p.end(), rng_);
    return p;
  }

private:
  std::mt19937_64 rng_;
};

inline jordan::Matrix permutation_matrix(const std::vector<std::size_t>& p) {
  jordan::Matrix m(p.size(), p.size());
  for (std::size_t i = 0; i < p.size(); ++i) m(p[i], i) = 1;
  return m;
}

}  // namespace testing

#endif
