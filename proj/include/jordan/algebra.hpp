#ifndef JORDAN_ALGEBRA_HPP
#define JORDAN_ALGEBRA_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "jordan/linalg.hpp"

namespace jordan {

/// Coefficient vector of an algebra element relative to the basis.
using Element = Vector;

/// Finite-dimensional algebra over Q given by structure constants:
/// b_i * b_j = sum_k c(i, j, k) b_k. Labels are for reporting only.
class Algebra {
public:
  Algebra() = default;
  explicit Algebra(std::vector<std::string> labels);
  /// Zero algebra with labels b1..bn.
  static Algebra zero(std::size_t dim);

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  std::optional<std::size_t> index_of(const std::string& label) const;
  void relabel(std::vector<std::string> labels);

  const Rational& coeff(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * dim_ + j) * dim_ + k];
  }
  /// b_i * b_j as a coefficient vector.
  Element basis_product(std::size_t i, std::size_t j) const;
  bool basis_product_is_zero(std::size_t i, std::size_t j) const { return zero_pair_[i * dim_ + j]; }

  /// Sets b_i * b_j; with mirror the product b_j * b_i is set to the same value.
  void set_product(std::size_t i, std::size_t j, const Element& value, bool mirror = true);

  Element multiply(const Element& x, const Element& y) const;
  /// Matrix of y -> x * y.
  Matrix left_multiplication(const Element& x) const;
  Element basis(std::size_t i) const { return unit_vector(dim_, i); }

  friend bool operator==(const Algebra& a, const Algebra& b) {
    return a.dim_ == b.dim_ && a.c_ == b.c_;
  }

private:
  void check(const Element& x) const;

  std::size_t dim_ = 0;
  std::vector<std::string> labels_;
  std::vector<Rational> c_;
  std::vector<bool> zero_pair_;
};

/// (x*y)*z - x*(y*z)
Element associator(const Algebra& a, const Element& x, const Element& y, const Element& z);

/// Left side of the linearised Jordan identity
/// (x,y,z*w) + (w,y,z*x) + (z,y,x*w); it vanishes identically on Jordan algebras.
Element jordan_defect(const Algebra& a, const Element& x, const Element& y, const Element& z,
                      const Element& w);

/// First basis quadruple (x, y, z, w) = (b_i, b_j, b_k, b_l) with nonzero defect.
struct JordanViolation {
  enum class Kind { NonCommutative, Identity } kind = Kind::Identity;
  std::array<std::size_t, 4> indices{};
  Element defect;
  std::string describe(const Algebra& a) const;
};

bool is_commutative(const Algebra& a);
std::optional<JordanViolation> find_jordan_violation(const Algebra& a);
bool is_jordan(const Algebra& a);
bool is_associative(const Algebra& a);
/// Checks x^2 y x = x^2 (y x), the unlinearised identity, at one pair of elements.
bool satisfies_jordan_identity_at(const Algebra& a, const Element& x, const Element& y);

Algebra direct_sum(const Algebra& a, const Algebra& b);
/// Symmetrised product x . y = (xy + yx)/2 of an associative algebra.
Algebra plus_algebra(const Algebra& a);
/// Adjoins an identity element labelled "1" as the last basis vector.
Algebra unitalization(const Algebra& a);
std::optional<Element> find_identity(const Algebra& a);
/// True iff p is invertible and p(x *_a y) = p(x) *_b p(y) on basis pairs.
bool check_isomorphism(const Algebra& a, const Algebra& b, const Matrix& p);
/// Structure constants relative to the basis given by the columns of p.
Algebra change_basis(const Algebra& a, const Matrix& p);

/// span{x*y : x in s, y in t}
Subspace product_span(const Algebra& a, const Subspace& s, const Subspace& t);
/// Subalgebra induced on a closed subspace, in the subspace's canonical basis.
Algebra induced_algebra(const Algebra& a, const Subspace& s);

}  // namespace jordan

#endif
