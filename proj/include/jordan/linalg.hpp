#ifndef JORDAN_LINALG_HPP
#define JORDAN_LINALG_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "jordan/rational.hpp"

namespace jordan {

using Vector = std::vector<Rational>;

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Rational& s, const Vector& v);
/// v += s * w
void axpy(Vector& v, const Rational& s, const Vector& w);
std::string to_string(const Vector& v);

class DimensionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Dense row-major matrix over Q.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  Matrix transpose() const;

  Vector apply(const Vector& v) const;
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RrefResult {
  Matrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);
std::optional<Vector> solve(const Matrix& m, const Vector& b);
std::optional<Matrix> inverse(const Matrix& m);
Rational trace(const Matrix& m);

/// Linear subspace of Q^n held in canonical reduced row-echelon form, so two
/// subspaces are equal exactly when their bases compare equal.
class Subspace {
public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : ambient_(ambient) {}

  static Subspace zero(std::size_t ambient) { return Subspace(ambient); }
  static Subspace full(std::size_t ambient);
  static Subspace span(std::size_t ambient, const std::vector<Vector>& generators);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  bool is_zero() const { return basis_.empty(); }
  bool is_full() const { return basis_.size() == ambient_; }
  const std::vector<Vector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  /// Remainder of v after clearing the pivot coordinates; zero iff v lies in the subspace.
  Vector reduce(const Vector& v) const;
  /// Coordinates of v (which must lie in the subspace) relative to basis().
  Vector coordinates(const Vector& v) const;
  /// Canonical basis of the orthogonal complement under the standard pairing.
  Subspace annihilator() const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

private:
  std::size_t ambient_ = 0;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;

  friend class RowReducer;
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
Subspace kernel(const Matrix& m);
/// Common kernel of a list of rows. Exact elimination runs on a subset that is
/// independent modulo a large prime; the other rows are checked against the result.
Subspace row_kernel(const std::vector<Vector>& rows, std::size_t cols);
std::string to_string(const Subspace& s);

/// Incremental echelon basis: rows are added one at a time and reduced
/// against what is already stored, so tall constraint systems never need
/// to be materialised as a matrix.
class RowReducer {
public:
  explicit RowReducer(std::size_t cols) : cols_(cols) {}

  /// Returns true when the row was independent of the rows seen so far.
  bool add(Vector row);
  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  bool full() const { return rows_.size() == cols_; }

  Subspace row_space() const;
  Subspace kernel() const;

private:
  std::size_t cols_;
  std::map<std::size_t, Vector> rows_;  // pivot column -> row, zero left of pivot, pivot 1
};

}  // namespace jordan

#endif
