#include "jordan/algebra.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace jordan {

namespace {

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> l;
  for (std::size_t i = 0; i < n; ++i) l.push_back("b" + std::to_string(i + 1));
  return l;
}

// Appends primes to later duplicates so every label stays unique.
void make_unique(std::vector<std::string>& labels) {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    while (std::find(labels.begin(), labels.begin() + static_cast<std::ptrdiff_t>(i), labels[i]) !=
           labels.begin() + static_cast<std::ptrdiff_t>(i))
      labels[i] += "'";
  }
}

}  // namespace

Algebra::Algebra(std::vector<std::string> labels)
    : dim_(labels.size()),
      labels_(std::move(labels)),
      c_(dim_ * dim_ * dim_),
      zero_pair_(dim_ * dim_, true) {}

Algebra Algebra::zero(std::size_t dim) { return Algebra(default_labels(dim)); }

std::optional<std::size_t> Algebra::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

void Algebra::relabel(std::vector<std::string> labels) {
  if (labels.size() != dim_)
    throw DimensionError("relabel: expected " + std::to_string(dim_) + " labels, got " +
                         std::to_string(labels.size()));
  labels_ = std::move(labels);
}

Element Algebra::basis_product(std::size_t i, std::size_t j) const {
  auto first = c_.begin() + static_cast<std::ptrdiff_t>((i * dim_ + j) * dim_);
  return Element(first, first + static_cast<std::ptrdiff_t>(dim_));
}

void Algebra::set_product(std::size_t i, std::size_t j, const Element& value, bool mirror) {
  if (i >= dim_ || j >= dim_) throw DimensionError("set_product: basis index out of range");
  check(value);
  std::copy(value.begin(), value.end(), c_.begin() + static_cast<std::ptrdiff_t>((i * dim_ + j) * dim_));
  zero_pair_[i * dim_ + j] = jordan::is_zero(value);
  if (mirror && i != j) set_product(j, i, value, false);
}

void Algebra::check(const Element& x) const {
  if (x.size() != dim_)
    throw DimensionError("element has " + std::to_string(x.size()) + " coordinates, algebra has dimension " +
                         std::to_string(dim_));
}

Element Algebra::multiply(const Element& x, const Element& y) const {
  check(x);
  check(y);
  Element r(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j].is_zero() || zero_pair_[i * dim_ + j]) continue;
      Rational s = x[i] * y[j];
      const Rational* row = &c_[(i * dim_ + j) * dim_];
      for (std::size_t k = 0; k < dim_; ++k)
        if (!row[k].is_zero()) r[k] += s * row[k];
    }
  }
  return r;
}

Matrix Algebra::left_multiplication(const Element& x) const {
  Matrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    Element col = multiply(x, basis(j));
    for (std::size_t k = 0; k < dim_; ++k) m(k, j) = col[k];
  }
  return m;
}

Element associator(const Algebra& a, const Element& x, const Element& y, const Element& z) {
  return a.multiply(a.multiply(x, y), z) - a.multiply(x, a.multiply(y, z));
}

Element jordan_defect(const Algebra& a, const Element& x, const Element& y, const Element& z,
                      const Element& w) {
  Element r = associator(a, x, y, a.multiply(z, w));
  r = r + associator(a, w, y, a.multiply(z, x));
  return r + associator(a, z, y, a.multiply(x, w));
}

std::string JordanViolation::describe(const Algebra& a) const {
  std::ostringstream os;
  if (kind == Kind::NonCommutative) {
    os << "not commutative: " << a.label(indices[0]) << "*" << a.label(indices[1]) << " - "
       << a.label(indices[1]) << "*" << a.label(indices[0]) << " = " << to_string(defect);
  } else {
    const auto& [i, j, k, l] = indices;
    os << "Jordan identity fails at (x,y,z,w) = (" << a.label(i) << ", " << a.label(j) << ", " << a.label(k)
       << ", " << a.label(l) << "): defect " << to_string(defect);
  }
  return os.str();
}

bool is_commutative(const Algebra& a) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (a.coeff(i, j, k) != a.coeff(j, i, k)) return false;
  return true;
}

std::optional<JordanViolation> find_jordan_violation(const Algebra& a) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (a.basis_product(i, j) != a.basis_product(j, i))
        return JordanViolation{JordanViolation::Kind::NonCommutative, {i, j, 0, 0},
                               a.basis_product(i, j) - a.basis_product(j, i)};

  // The defect is multilinear and, for commutative products, symmetric in
  // (x, z, w); over a field of characteristic 0 checking basis quadruples
  // with i <= k <= l is therefore a complete test.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = i; k < n; ++k)
      for (std::size_t l = k; l < n; ++l)
        for (std::size_t j = 0; j < n; ++j) {
          Element d = jordan_defect(a, a.basis(i), a.basis(j), a.basis(k), a.basis(l));
          if (!is_zero(d)) return JordanViolation{JordanViolation::Kind::Identity, {i, j, k, l}, d};
        }
  return std::nullopt;
}

bool is_jordan(const Algebra& a) { return !find_jordan_violation(a).has_value(); }

bool is_associative(const Algebra& a) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!is_zero(associator(a, a.basis(i), a.basis(j), a.basis(k)))) return false;
  return true;
}

bool satisfies_jordan_identity_at(const Algebra& a, const Element& x, const Element& y) {
  Element xx = a.multiply(x, x);
  return a.multiply(a.multiply(xx, y), x) == a.multiply(xx, a.multiply(y, x));
}

Algebra direct_sum(const Algebra& a, const Algebra& b) {
  std::vector<std::string> labels = a.labels();
  labels.insert(labels.end(), b.labels().begin(), b.labels().end());
  make_unique(labels);
  Algebra s(std::move(labels));
  const std::size_t n = a.dim(), m = b.dim(), d = n + m;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (a.basis_product_is_zero(i, j)) continue;
      Element v(d);
      for (std::size_t k = 0; k < n; ++k) v[k] = a.coeff(i, j, k);
      s.set_product(i, j, v, false);
    }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (b.basis_product_is_zero(i, j)) continue;
      Element v(d);
      for (std::size_t k = 0; k < m; ++k) v[n + k] = b.coeff(i, j, k);
      s.set_product(n + i, n + j, v, false);
    }
  return s;
}

Algebra plus_algebra(const Algebra& a) {
  if (!is_associative(a)) throw std::invalid_argument("plus_algebra: source algebra is not associative");
  Algebra p(a.labels());
  const Rational half(1, 2);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i; j < a.dim(); ++j)
      p.set_product(i, j, half * (a.basis_product(i, j) + a.basis_product(j, i)));
  return p;
}

Algebra unitalization(const Algebra& a) {
  const std::size_t n = a.dim();
  std::vector<std::string> labels = a.labels();
  labels.push_back("1");
  make_unique(labels);
  Algebra u(std::move(labels));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Element v = a.basis_product(i, j);
      v.push_back(0);
      u.set_product(i, j, v, false);
    }
  for (std::size_t i = 0; i <= n; ++i) u.set_product(n, i, unit_vector(n + 1, i));
  return u;
}

std::optional<Element> find_identity(const Algebra& a) {
  const std::size_t n = a.dim();
  // unknown u: u*b_i = b_i and b_i*u = b_i for all i
  Matrix m(2 * n * n, n);
  Vector rhs(2 * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t r1 = i * n + k, r2 = n * n + i * n + k;
      for (std::size_t u = 0; u < n; ++u) {
        m(r1, u) = a.coeff(u, i, k);
        m(r2, u) = a.coeff(i, u, k);
      }
      rhs[r1] = rhs[r2] = (i == k) ? 1 : 0;
    }
  return solve(m, rhs);
}

bool check_isomorphism(const Algebra& a, const Algebra& b, const Matrix& p) {
  const std::size_t n = a.dim();
  if (b.dim() != n || p.rows() != n || p.cols() != n) return false;
  if (!inverse(p)) return false;
  std::vector<Element> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(p.column(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (p.apply(a.basis_product(i, j)) != b.multiply(images[i], images[j])) return false;
  return true;
}

Algebra change_basis(const Algebra& a, const Matrix& p) {
  const std::size_t n = a.dim();
  auto inv = inverse(p);
  if (!inv) throw std::invalid_argument("change_basis: matrix is singular");
  Algebra r(a.labels());
  std::vector<Element> cols;
  for (std::size_t i = 0; i < n; ++i) cols.push_back(p.column(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r.set_product(i, j, inv->apply(a.multiply(cols[i], cols[j])), false);
  return r;
}

Subspace product_span(const Algebra& a, const Subspace& s, const Subspace& t) {
  if (s.ambient() != a.dim() || t.ambient() != a.dim())
    throw DimensionError("product_span: subspace does not live in this algebra");
  RowReducer rr(a.dim());
  for (const auto& x : s.basis())
    for (const auto& y : t.basis()) {
      rr.add(a.multiply(x, y));
      if (rr.full()) return rr.row_space();
    }
  return rr.row_space();
}

Algebra induced_algebra(const Algebra& a, const Subspace& s) {
  if (s.ambient() != a.dim()) throw DimensionError("induced_algebra: ambient dimension mismatch");
  std::vector<std::string> labels;
  for (auto p : s.pivots()) labels.push_back(a.label(p));
  Algebra r(std::move(labels));
  const auto& b = s.basis();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) {
      Element prod = a.multiply(b[i], b[j]);
      if (!s.contains(prod)) throw std::invalid_argument("induced_algebra: subspace is not closed under the product");
      r.set_product(i, j, s.coordinates(prod), false);
    }
  return r;
}

}  // namespace jordan
