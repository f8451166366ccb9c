#include "jordan/linalg.hpp"

#include <sstream>

namespace jordan {

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v.at(i) = 1;
  return v;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

static void check_same(const Vector& a, const Vector& b) {
  if (a.size() != b.size())
    throw DimensionError("vector length mismatch: " + std::to_string(a.size()) + " vs " +
                         std::to_string(b.size()));
}

Vector operator+(const Vector& a, const Vector& b) {
  check_same(a, b);
  Vector r(a);
  for (std::size_t i = 0; i < r.size(); ++i)
    if (!b[i].is_zero()) r[i] += b[i];
  return r;
}

Vector operator-(const Vector& a, const Vector& b) {
  check_same(a, b);
  Vector r(a);
  for (std::size_t i = 0; i < r.size(); ++i)
    if (!b[i].is_zero()) r[i] -= b[i];
  return r;
}

Vector operator*(const Rational& s, const Vector& v) {
  Vector r(v.size());
  if (s.is_zero()) return r;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) r[i] = s * v[i];
  return r;
}

void axpy(Vector& v, const Rational& s, const Vector& w) {
  check_same(v, w);
  if (s.is_zero()) return;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!w[i].is_zero()) v[i] += s * w[i];
}

std::string to_string(const Vector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ')';
  return os.str();
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionError("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw DimensionError("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw DimensionError("matrix-vector size mismatch");
  Vector out(rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c].is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Rational& x = (*this)(r, c);
      if (!x.is_zero()) out[r] += x * v[c];
    }
  }
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product size mismatch");
  Matrix m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) m(i, j) += x * b(k, j);
    }
  return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix difference size mismatch");
  Matrix m(a);
  for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] -= b.data_[i];
  return m;
}

RrefResult rref(const Matrix& input) {
  RrefResult res{input, 0, {}};
  Matrix& m = res.reduced;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
    Rational inv = m(r, c).inverse();
    for (std::size_t j = c; j < cols; ++j)
      if (!m(r, j).is_zero()) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Rational f = m(i, c);
      for (std::size_t j = c; j < cols; ++j)
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
    }
    res.pivots.push_back(c);
    ++r;
  }
  res.rank = r;
  return res;
}

std::size_t rank(const Matrix& m) {
  RowReducer rr(m.cols());
  for (std::size_t r = 0; r < m.rows() && !rr.full(); ++r) rr.add(m.row(r));
  return rr.rank();
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw DimensionError("solve: right-hand side length mismatch");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  RrefResult red = rref(aug);
  Vector x(m.cols());
  for (std::size_t i = 0; i < red.rank; ++i) {
    std::size_t p = red.pivots[i];
    if (p == m.cols()) return std::nullopt;
    x[p] = red.reduced(i, m.cols());
  }
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  RrefResult red = rref(aug);
  if (red.rank < n || red.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = red.reduced(r, n + c);
  return inv;
}

Rational trace(const Matrix& m) {
  Rational t;
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) t += m(i, i);
  return t;
}

Subspace Subspace::full(std::size_t ambient) {
  Subspace s(ambient);
  for (std::size_t i = 0; i < ambient; ++i) {
    s.basis_.push_back(unit_vector(ambient, i));
    s.pivots_.push_back(i);
  }
  return s;
}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vector>& generators) {
  RowReducer rr(ambient);
  for (const auto& g : generators) {
    rr.add(g);
    if (rr.full()) break;
  }
  return rr.row_space();
}

Vector Subspace::reduce(const Vector& v) const {
  if (v.size() != ambient_) throw DimensionError("subspace: vector length mismatch");
  Vector r(v);
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    Rational f = r[pivots_[i]];
    if (!f.is_zero()) axpy(r, -f, basis_[i]);
  }
  return r;
}

bool Subspace::contains(const Vector& v) const { return jordan::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionError("subspace: ambient dimension mismatch");
  if (other.dim() > dim()) return false;
  for (const auto& b : other.basis_)
    if (!contains(b)) return false;
  return true;
}

Vector Subspace::coordinates(const Vector& v) const {
  if (v.size() != ambient_) throw DimensionError("subspace: vector length mismatch");
  Vector c(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) c[i] = v[pivots_[i]];
  return c;
}

Subspace Subspace::annihilator() const {
  RowReducer rr(ambient_);
  for (const auto& b : basis_) rr.add(b);
  return rr.kernel();
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw DimensionError("subspace sum: ambient dimension mismatch");
  RowReducer rr(a.ambient());
  for (const auto& v : a.basis()) rr.add(v);
  for (const auto& v : b.basis()) rr.add(v);
  return rr.row_space();
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw DimensionError("subspace intersect: ambient dimension mismatch");
  return sum(a.annihilator(), b.annihilator()).annihilator();
}

Subspace kernel(const Matrix& m) {
  RowReducer rr(m.cols());
  for (std::size_t r = 0; r < m.rows() && !rr.full(); ++r) rr.add(m.row(r));
  return rr.kernel();
}

Subspace row_kernel(const std::vector<Vector>& rows, std::size_t cols) {
  constexpr std::uint64_t p = (std::uint64_t{1} << 61) - 1;
  using u128 = unsigned __int128;
  auto mulmod = [](std::uint64_t a, std::uint64_t b) { return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p); };

  RowReducer exact(cols);
  std::vector<bool> used(rows.size(), false);
  std::map<std::size_t, std::vector<std::uint64_t>> modular;
  for (std::size_t r = 0; r < rows.size() && modular.size() < cols; ++r) {
    if (rows[r].size() != cols) throw DimensionError("row_kernel: row length mismatch");
    std::vector<std::uint64_t> v(cols);
    bool ok = true;
    for (std::size_t j = 0; j < cols && ok; ++j) {
      auto x = rows[r][j].residue(p);
      if (x) v[j] = *x;
      ok = x.has_value();
    }
    if (!ok) {
      used[r] = true;
      exact.add(rows[r]);
      continue;
    }
    for (const auto& [piv, w] : modular) {
      if (v[piv] == 0) continue;
      std::uint64_t f = p - v[piv];
      for (std::size_t j = piv; j < cols; ++j)
        if (w[j]) v[j] = (v[j] + mulmod(f, w[j])) % p;
    }
    std::size_t piv = 0;
    while (piv < cols && v[piv] == 0) ++piv;
    if (piv == cols) continue;
    std::uint64_t inv = 1;
    for (std::uint64_t b = v[piv], e = p - 2; e; e >>= 1, b = mulmod(b, b))
      if (e & 1) inv = mulmod(inv, b);
    for (std::size_t j = piv; j < cols; ++j) v[j] = mulmod(v[j], inv);
    modular.emplace(piv, std::move(v));
    used[r] = true;
    exact.add(rows[r]);
  }

  Subspace k = exact.kernel();
  for (std::size_t r = 0; r < rows.size() && !k.is_zero(); ++r) {
    if (used[r]) continue;
    if (rows[r].size() != cols) throw DimensionError("row_kernel: row length mismatch");
    for (const auto& v : k.basis()) {
      Rational dot;
      for (std::size_t j = 0; j < cols; ++j)
        if (!rows[r][j].is_zero() && !v[j].is_zero()) dot += rows[r][j] * v[j];
      if (!dot.is_zero()) {
        exact.add(rows[r]);
        k = exact.kernel();
        break;
      }
    }
  }
  return k;
}

std::string to_string(const Subspace& s) {
  std::ostringstream os;
  os << "span{";
  for (std::size_t i = 0; i < s.basis().size(); ++i) os << (i ? ", " : "") << to_string(s.basis()[i]);
  os << '}';
  return os.str();
}

bool RowReducer::add(Vector row) {
  if (row.size() != cols_) throw DimensionError("RowReducer: row length mismatch");
  for (const auto& [p, r] : rows_) {
    if (row[p].is_zero()) continue;
    Rational f = row[p];
    axpy(row, -f, r);
  }
  std::size_t p = 0;
  while (p < cols_ && row[p].is_zero()) ++p;
  if (p == cols_) return false;
  Rational inv = row[p].inverse();
  for (std::size_t j = p; j < cols_; ++j)
    if (!row[j].is_zero()) row[j] *= inv;
  rows_.emplace(p, std::move(row));
  return true;
}

Subspace RowReducer::row_space() const {
  std::vector<std::size_t> pivots;
  std::vector<Vector> rows;
  for (const auto& [p, r] : rows_) {
    pivots.push_back(p);
    rows.push_back(r);
  }
  for (std::size_t i = rows.size(); i-- > 0;) {
    for (std::size_t k = 0; k < i; ++k) {
      Rational f = rows[k][pivots[i]];
      if (!f.is_zero()) axpy(rows[k], -f, rows[i]);
    }
  }
  Subspace s(cols_);
  s.basis_ = std::move(rows);
  s.pivots_ = std::move(pivots);
  return s;
}

Subspace RowReducer::kernel() const {
  Subspace rs = row_space();
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : rs.pivots()) is_pivot[p] = true;
  std::vector<Vector> gens;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    Vector v(cols_);
    v[f] = 1;
    for (std::size_t i = 0; i < rs.dim(); ++i) {
      const Rational& x = rs.basis()[i][f];
      if (!x.is_zero()) v[rs.pivots()[i]] = -x;
    }
    gens.push_back(std::move(v));
  }
  return Subspace::span(cols_, gens);
}

}  // namespace jordan
