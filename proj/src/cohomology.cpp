#include "jordan/cohomology.hpp"

#include <stdexcept>

namespace jordan {

namespace {

std::size_t pair_index(std::size_t n, std::size_t p, std::size_t q) {
  if (p > q) std::swap(p, q);
  return p * n - p * (p - 1) / 2 + (q - p);
}

}  // namespace

std::size_t symmetric_coordinate_count(std::size_t n) { return n * (n + 1) / 2 * n; }

Vector symmetric_coordinates(const BilinearMap& h) {
  const std::size_t n = h.size();
  Vector v(symmetric_coordinate_count(n));
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p; q < n; ++q)
      for (std::size_t m = 0; m < n; ++m) v[pair_index(n, p, q) * n + m] = h[p][q].at(m);
  return v;
}

BilinearMap bilinear_from_coordinates(std::size_t n, const Vector& coords) {
  if (coords.size() != symmetric_coordinate_count(n))
    throw DimensionError("bilinear_from_coordinates: wrong coordinate count");
  BilinearMap h(n, std::vector<Element>(n, Element(n)));
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p; q < n; ++q)
      for (std::size_t m = 0; m < n; ++m) h[p][q][m] = h[q][p][m] = coords[pair_index(n, p, q) * n + m];
  return h;
}

Algebra null_extension(const Algebra& a, const BilinearMap& h) {
  const std::size_t n = a.dim();
  if (h.size() != n) throw DimensionError("null_extension: bilinear map has wrong size");
  for (std::size_t p = 0; p < n; ++p) {
    if (h[p].size() != n) throw DimensionError("null_extension: bilinear map has wrong size");
    for (std::size_t q = 0; q < n; ++q)
      if (h[p][q] != h[q][p]) throw std::invalid_argument("null_extension: bilinear map is not symmetric");
  }
  std::vector<std::string> labels = a.labels();
  for (const auto& l : a.labels()) labels.push_back(l + "'");
  Algebra ext(std::move(labels));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Element prod = a.basis_product(i, j);
      Element v(2 * n);
      for (std::size_t k = 0; k < n; ++k) {
        v[k] = prod[k];
        v[n + k] = h[i][j].at(k);
      }
      ext.set_product(i, j, v, false);
      Element act(2 * n);
      for (std::size_t k = 0; k < n; ++k) act[n + k] = prod[k];
      // b_i * b_j' = (b_i b_j)' and b_i' * b_j = (b_i b_j)'
      ext.set_product(i, n + j, act, false);
      ext.set_product(n + i, j, act, false);
    }
  return ext;
}

BilinearMap coboundary(const Algebra& a, const Matrix& mu) {
  const std::size_t n = a.dim();
  if (mu.rows() != n || mu.cols() != n) throw DimensionError("coboundary: map has wrong size");
  BilinearMap h(n, std::vector<Element>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      h[i][j] = a.multiply(mu.column(i), a.basis(j)) + a.multiply(a.basis(i), mu.column(j)) -
                mu.apply(a.basis_product(i, j));
  return h;
}

CocycleSpace cocycle_space(const Algebra& a) {
  if (auto v = find_jordan_violation(a))
    throw std::invalid_argument("cocycle_space: not a Jordan algebra (" + v->describe(a) + ")");
  const std::size_t n = a.dim();
  const std::size_t unknowns = symmetric_coordinate_count(n);

  // Copy component of the extension's defect on basis quadruples of J, as a
  // linear form in h. A product node (u v) contributes A h(u, v), where A is
  // the chain of multiplications above it.
  const std::size_t pairs = n * (n + 1) / 2;
  std::vector<Vector> block(n, Vector(unknowns));
  auto add_term = [&](const Matrix* op, const Element& u, const Element& v, const Rational& sign) {
    std::vector<Rational> s(pairs);
    for (std::size_t p = 0; p < n; ++p) {
      if (u[p].is_zero() && v[p].is_zero()) continue;
      for (std::size_t q = p; q < n; ++q) {
        Rational x = u[p] * v[q];
        if (q != p) x += u[q] * v[p];
        s[pair_index(n, p, q)] = sign * x;
      }
    }
    for (std::size_t m = 0; m < n; ++m)
      for (std::size_t t = 0; t < n; ++t) {
        if (op ? (*op)(m, t).is_zero() : m != t) continue;
        for (std::size_t pq = 0; pq < pairs; ++pq) {
          if (s[pq].is_zero()) continue;
          if (op)
            block[m][pq * n + t] += (*op)(m, t) * s[pq];
          else
            block[m][pq * n + t] += s[pq];
        }
      }
  };
  const Rational plus(1), minus(-1);
  auto associator_terms = [&](const Element& x, const Element& y, const Element& z, const Element& w) {
    Element c = a.multiply(z, w), xy = a.multiply(x, y), yc = a.multiply(y, c);
    Matrix lc = a.left_multiplication(c), lx = a.left_multiplication(x);
    Matrix inner = a.left_multiplication(xy) - lx * a.left_multiplication(y);
    add_term(nullptr, xy, c, plus);
    add_term(&lc, x, y, plus);
    add_term(&inner, z, w, plus);
    add_term(nullptr, x, yc, minus);
    add_term(&lx, y, c, minus);
  };

  std::vector<Vector> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = i; k < n; ++k)
      for (std::size_t l = k; l < n; ++l)
        for (std::size_t j = 0; j < n; ++j) {
          for (auto& r : block) r = Vector(unknowns);
          Element x = a.basis(i), y = a.basis(j), z = a.basis(k), w = a.basis(l);
          associator_terms(x, y, z, w);
          associator_terms(w, y, z, x);
          associator_terms(z, y, x, w);
          for (auto& r : block)
            if (!is_zero(r)) rows.push_back(std::move(r));
        }

  CocycleSpace cs;
  cs.cocycles = row_kernel(rows, unknowns);
  std::vector<Vector> images;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      Matrix mu(n, n);
      mu(r, c) = 1;
      images.push_back(symmetric_coordinates(coboundary(a, mu)));
    }
  cs.coboundaries = Subspace::span(unknowns, images);
  cs.z2_dim = cs.cocycles.dim();
  cs.b2_dim = cs.coboundaries.dim();
  if (cs.b2_dim > cs.z2_dim) throw std::logic_error("cocycle_space: coboundaries exceed cocycles");
  cs.h2_dim = cs.z2_dim - cs.b2_dim;
  return cs;
}

}  // namespace jordan
