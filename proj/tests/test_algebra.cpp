#include <doctest.h>

#include "jordan/algebra.hpp"
#include "jordan/fingerprint.hpp"
#include "support.hpp"

using jordan::Algebra;
using jordan::Element;
using jordan::Matrix;
using jordan::Rational;
using testing::alg;
using testing::vec;

namespace {

// Matrix units of M2 in the order E11, E22, E12, E21 with the associative product.
Algebra matrix_units() {
  Algebra m({"E11", "E22", "E12", "E21"});
  const std::size_t row[] = {0, 1, 0, 1}, col[] = {0, 1, 1, 0};
  auto unit = [&](std::size_t r, std::size_t c) -> std::size_t {
    for (std::size_t k = 0; k < 4; ++k)
      if (row[k] == r && col[k] == c) return k;
    return 4;
  };
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      Element v(4);
      if (col[i] == row[j]) v[unit(row[i], col[j])] = 1;
      m.set_product(i, j, v, false);
    }
  return m;
}

}  // namespace

TEST_CASE("multiply") {
  const Algebra& b3 = alg("B3");
  CHECK(b3.multiply(b3.basis(0), b3.basis(0)) == b3.basis(1));
  const Algebra& j2 = alg("J2");
  CHECK(j2.multiply(j2.basis(2), j2.basis(3)) == vec({Rational(1, 2), Rational(1, 2), 0, 0}));
  CHECK(jordan::is_zero(j2.multiply(Element(4), testing::Gen(1).element(4))));
  CHECK_THROWS_AS(j2.multiply(Element(3), Element(4)), jordan::DimensionError);
}

TEST_CASE("associator") {
  const Algebra& t5 = alg("T5");
  Element e1 = t5.basis(0), e3 = t5.basis(2);
  CHECK(jordan::associator(t5, e1, e3, e3) == vec({Rational(-1, 2), Rational(1, 2), 0}));
  CHECK(jordan::is_zero(jordan::associator(t5, e1, e1, e1)));
  testing::Gen g(2);
  const Algebra& j3 = alg("J3");
  for (int i = 0; i < 20; ++i)
    CHECK(jordan::is_zero(jordan::associator(j3, g.element(4), g.element(4), g.element(4))));
}

TEST_CASE("commutativity") {
  for (const auto& e : testing::catalog().entries()) CHECK(jordan::is_commutative(alg(e.name)));
  Algebra a({"b1", "b2"});
  a.set_product(0, 1, vec({1, 0}), false);
  CHECK_FALSE(jordan::is_commutative(a));
  CHECK_FALSE(jordan::is_commutative(matrix_units()));
  auto v = jordan::find_jordan_violation(a);
  REQUIRE(v);
  CHECK(v->kind == jordan::JordanViolation::Kind::NonCommutative);
}

TEST_CASE("Jordan identity on examples") {
  CHECK(jordan::is_jordan(Algebra::zero(5)));
  CHECK(jordan::is_jordan(alg("J2")));
  CHECK(jordan::is_jordan(jordan::plus_algebra(matrix_units())));
}

TEST_CASE("rejected extension of T5 by an N01 vector") {
  Algebra a = testing::from_text(
      "algebra X\ndim 4\nbasis e1 e2 e3 n1\n"
      "e1*e1 = e1\ne2*e2 = e2\ne3*e3 = e1 + e2\ne1*e3 = 1/2 e3\ne2*e3 = 1/2 e3\n"
      "e1*n1 = 1/2 n1\nend\n");
  auto v = jordan::find_jordan_violation(a);
  REQUIRE(v);
  CHECK(v->kind == jordan::JordanViolation::Kind::Identity);
  const auto [i, j, k, l] = v->indices;
  CHECK_FALSE(jordan::is_zero(jordan::jordan_defect(a, a.basis(i), a.basis(j), a.basis(k), a.basis(l))));
  CHECK(v->describe(a).find("Jordan identity fails") != std::string::npos);
}

TEST_CASE("square-zero half-space construction that is not Jordan") {
  Algebra a = testing::from_text(
      "algebra X\ndim 4\nbasis e a b c\n"
      "e*e = e\ne*b = 1/2 b\ne*c = 1/2 c\nb*b = a\na*b = c\nend\n");
  CHECK(jordan::is_commutative(a));
  auto v = jordan::find_jordan_violation(a);
  REQUIRE(v);
  const auto [i, j, k, l] = v->indices;
  CHECK_FALSE(jordan::is_zero(jordan::jordan_defect(a, a.basis(i), a.basis(j), a.basis(k), a.basis(l))));
}

TEST_CASE("associativity flags") {
  CHECK(jordan::is_associative(alg("J3")));
  CHECK_FALSE(jordan::is_associative(alg("B2")));
  CHECK(jordan::is_associative(alg("J61")));
  CHECK(jordan::is_associative(matrix_units()));
}

TEST_CASE("direct sums") {
  const Algebra& f2 = alg("F2");
  Algebra four = jordan::direct_sum(jordan::direct_sum(f2, f2), jordan::direct_sum(f2, f2));
  CHECK(four == alg("J73"));
  CHECK(jordan::direct_sum(alg("B3"), alg("B3")) == alg("J68"));
  CHECK(jordan::direct_sum(alg("T5"), Algebra::zero(0)) == alg("T5"));
}

TEST_CASE("plus algebra") {
  CHECK(jordan::plus_algebra(alg("J3")) == alg("J3"));
  Algebra p = jordan::plus_algebra(matrix_units());
  CHECK(p.multiply(p.basis(2), p.basis(3)) == vec({Rational(1, 2), Rational(1, 2), 0, 0}));
  CHECK(jordan::fingerprint(p) == jordan::fingerprint(alg("J2")));
}

TEST_CASE("unitalization") {
  Algebra u = jordan::unitalization(alg("F2"));
  Matrix swap(2, 2);
  swap(0, 1) = 1;
  swap(1, 0) = 1;
  CHECK(jordan::check_isomorphism(alg("B1"), u, swap));
  for (const char* name : {"J5", "B3", "J55", "J73"}) {
    Algebra v = jordan::unitalization(alg(name));
    CHECK(jordan::is_jordan(v));
    CHECK(jordan::find_identity(v) == v.basis(v.dim() - 1));
  }
}

TEST_CASE("find identity") {
  CHECK(jordan::find_identity(alg("J36")) == vec({1, 0, 0, 0}));
  CHECK_FALSE(jordan::find_identity(alg("J5")));
  CHECK(jordan::find_identity(alg("J1")) == vec({1, 1, 0, 1}));
}

TEST_CASE("check isomorphism") {
  const Algebra& j2 = alg("J2");
  CHECK(jordan::check_isomorphism(j2, j2, Matrix::identity(4)));
  CHECK(jordan::check_isomorphism(j2, jordan::plus_algebra(matrix_units()), Matrix::identity(4)));
  CHECK_FALSE(jordan::check_isomorphism(j2, j2, Matrix(4, 4)));
  Matrix p = Matrix::identity(4);
  p(0, 0) = 2;
  CHECK_FALSE(jordan::check_isomorphism(j2, j2, p));
}

TEST_CASE("change of basis is an isomorphism") {
  testing::Gen g(3);
  for (const char* name : {"J2", "J33", "J55", "J61", "T5"}) {
    const Algebra& a = alg(name);
    for (int t = 0; t < 5; ++t) {
      Matrix p = g.invertible(a.dim());
      Algebra b = jordan::change_basis(a, p);
      CHECK(jordan::check_isomorphism(b, a, p));
      CHECK(jordan::is_jordan(b));
    }
  }
}
