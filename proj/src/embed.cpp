#include "jordan/embed.hpp"

#include <stdexcept>

namespace jordan {

namespace {

constexpr int kScanRange = 2;

std::optional<Element> isotropic_vector(const Algebra& a, const std::vector<Vector>& basis) {
  const std::size_t d = basis.size();
  if (d == 0) return std::nullopt;
  std::vector<int> c(d, -kScanRange);
  for (;;) {
    bool nonzero = false;
    Element y(a.dim());
    for (std::size_t i = 0; i < d; ++i)
      if (c[i] != 0) {
        nonzero = true;
        axpy(y, Rational(c[i]), basis[i]);
      }
    if (nonzero && is_zero(a.multiply(y, y))) return y;
    std::size_t k = 0;
    while (k < d && c[k] == kScanRange) c[k++] = -kScanRange;
    if (k == d) return std::nullopt;
    ++c[k];
  }
}

// Products of linear forms sum_i x_{off+i} b_i, collected per output coordinate.
std::vector<Polynomial> product_polys(const Algebra& a, std::size_t xoff, std::size_t yoff) {
  const std::size_t n = a.dim();
  std::vector<Polynomial> out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (a.basis_product_is_zero(i, j)) continue;
      Monomial m = Monomial::variable(xoff + i) * Monomial::variable(yoff + j);
      for (std::size_t k = 0; k < n; ++k) {
        const Rational& c = a.coeff(i, j, k);
        if (!c.is_zero()) out[k] = out[k] + Polynomial::term(c, m);
      }
    }
  return out;
}

}  // namespace

bool is_b2_witness(const Algebra& a, const Element& e, const Element& y) {
  if (e.size() != a.dim() || y.size() != a.dim()) return false;
  if (is_zero(y)) return false;
  if (a.multiply(e, e) != e) return false;
  if (a.multiply(e, y) != Rational(1, 2) * y) return false;
  return is_zero(a.multiply(y, y));
}

PolySystem b2_system(const Algebra& a) {
  const std::size_t n = a.dim();
  if (2 * n + 1 > kMaxVariables) throw std::invalid_argument("b2_system: algebra too large");
  PolySystem s;
  for (std::size_t i = 0; i < n; ++i) s.variables.push_back("e" + std::to_string(i + 1));
  for (std::size_t i = 0; i < n; ++i) s.variables.push_back("y" + std::to_string(i + 1));
  auto ee = product_polys(a, 0, 0);
  auto ey = product_polys(a, 0, n);
  auto yy = product_polys(a, n, n);
  for (std::size_t k = 0; k < n; ++k) {
    s.polynomials.push_back(ee[k] - Polynomial::variable(k));
    s.polynomials.push_back(ey[k] - Polynomial::term(Rational(1, 2), Monomial::variable(n + k)));
    s.polynomials.push_back(yy[k]);
  }
  return s;
}

EmbedResult embeds_b2(const Algebra& a, const GroebnerOptions& opts) {
  if (!is_jordan(a)) throw std::invalid_argument("embeds_b2: algebra is not Jordan");
  const std::size_t n = a.dim();
  EmbedResult res;

  for (std::size_t i = 0; i < n; ++i) {
    Element e = a.basis(i);
    if (a.multiply(e, e) != e) continue;
    Matrix m = a.left_multiplication(e);
    for (std::size_t k = 0; k < n; ++k) m(k, k) -= Rational(1, 2);
    if (auto y = isotropic_vector(a, kernel(m).basis())) {
      res.answer = Solvability::Yes;
      res.witness = B2Witness{e, *y};
      res.method = "witness scan";
      return res;
    }
  }

  res.method = "groebner";
  PolySystem base = b2_system(a);
  base.variables.push_back("t");
  const std::size_t t = 2 * n;
  bool inconclusive = false;
  for (std::size_t i = 0; i < n; ++i) {
    PolySystem branch = base;
    branch.polynomials.push_back(Polynomial::term(1, Monomial::variable(t) * Monomial::variable(n + i)) -
                                 Polynomial::constant(1));
    GroebnerResult g = buchberger(branch, opts);
    res.pairs_reduced += g.pairs_reduced;
    Solvability s = !g.complete() ? Solvability::Inconclusive : g.trivial() ? Solvability::No : Solvability::Yes;
    res.branches.push_back(s);
    if (s == Solvability::Yes) {
      res.answer = Solvability::Yes;
      return res;
    }
    if (s == Solvability::Inconclusive) inconclusive = true;
  }
  res.answer = inconclusive ? Solvability::Inconclusive : Solvability::No;
  return res;
}

}  // namespace jordan
