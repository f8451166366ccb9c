#include <doctest.h>

#include "jordan/cohomology.hpp"
#include "support.hpp"

using jordan::Algebra;
using jordan::BilinearMap;
using jordan::Matrix;
using testing::alg;

namespace {

BilinearMap zero_map(std::size_t n) { return BilinearMap(n, std::vector<jordan::Element>(n, jordan::Element(n))); }

BilinearMap random_symmetric(testing::Gen& g, std::size_t n) {
  BilinearMap h = zero_map(n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p; q < n; ++q) h[p][q] = h[q][p] = g.element(n, 2);
  return h;
}

}  // namespace

TEST_CASE("null extension") {
  for (const char* name : {"J2", "J33", "B2"}) {
    const Algebra& a = alg(name);
    Algebra e = jordan::null_extension(a, zero_map(a.dim()));
    CHECK(e.dim() == 2 * a.dim());
    CHECK(jordan::is_jordan(e));
  }
  BilinearMap h = zero_map(1);
  h[0][0] = {1};
  CHECK(jordan::null_extension(alg("F2"), h) == alg("B3"));
}

TEST_CASE("coboundary extensions are split") {
  testing::Gen g(21);
  for (const char* name : {"J55", "J14", "T5"}) {
    const Algebra& a = alg(name);
    const std::size_t n = a.dim();
    Matrix mu = g.matrix(n, n, 2);
    Algebra eh = jordan::null_extension(a, jordan::coboundary(a, mu));
    Algebra e0 = jordan::null_extension(a, zero_map(n));
    Matrix p = Matrix::identity(2 * n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) p(n + r, c) = mu(r, c);
    CHECK(jordan::check_isomorphism(eh, e0, p));
  }
}

TEST_CASE("symmetric coordinates round trip") {
  testing::Gen g(22);
  BilinearMap h = random_symmetric(g, 3);
  auto v = jordan::symmetric_coordinates(h);
  CHECK(v.size() == jordan::symmetric_coordinate_count(3));
  CHECK(jordan::bilinear_from_coordinates(3, v) == h);
}

TEST_CASE("second cohomology") {
  CHECK(jordan::cocycle_space(alg("J59")).h2_dim == 0);
  CHECK(jordan::cocycle_space(alg("J55")).h2_dim >= 1);
  CHECK(jordan::cocycle_space(alg("J56")).h2_dim >= 1);
  CHECK(jordan::cocycle_space(alg("F1")).h2_dim == 0);
  for (std::size_t n = 1; n <= 3; ++n) {
    auto cs = jordan::cocycle_space(Algebra::zero(n));
    CHECK(cs.b2_dim == 0);
    CHECK(cs.h2_dim == n * n * (n + 1) / 2);
  }
}

TEST_CASE("cocycles are exactly the Jordan null extensions") {
  testing::Gen g(23);
  for (const char* name : {"B2", "B3", "T5", "J16"}) {
    const Algebra& a = alg(name);
    auto cs = jordan::cocycle_space(a);
    for (int t = 0; t < 10; ++t) {
      BilinearMap h = random_symmetric(g, a.dim());
      CHECK(jordan::is_jordan(jordan::null_extension(a, h)) == cs.cocycles.contains(jordan::symmetric_coordinates(h)));
      jordan::Vector z(cs.cocycles.ambient());
      for (const auto& b : cs.cocycles.basis()) jordan::axpy(z, g.rational(3), b);
      CHECK(jordan::is_jordan(jordan::null_extension(a, jordan::bilinear_from_coordinates(a.dim(), z))));
    }
  }
}
