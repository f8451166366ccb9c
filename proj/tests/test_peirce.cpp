#include <doctest.h>

#include "jordan/peirce.hpp"
#include "support.hpp"

using jordan::Algebra;
using jordan::Element;
using jordan::Rational;
using jordan::Subspace;
using testing::alg;

TEST_CASE("idempotents") {
  for (const auto& e : testing::catalog().entries()) {
    const Algebra& a = alg(e.name);
    if (a.label(0) == "e1" || a.label(0) == "e") CHECK(jordan::is_idempotent(a, a.basis(0)));
  }
  CHECK_FALSE(jordan::is_idempotent(alg("J2"), Element(4)));
  const Algebra& j55 = alg("J55");
  CHECK(jordan::is_idempotent(j55, jordan::parse_element(j55, "e1 - n2 + n3")));
  for (long long c : {2LL, -3LL}) {
    Element e = j55.basis(0);
    e[2] = Rational(-c * c);
    e[3] = Rational(c);
    CHECK(jordan::is_idempotent(j55, e));
  }
}

TEST_CASE("single idempotent decompositions") {
  const Algebra& j9 = alg("J9");
  auto d = jordan::peirce_single(j9, j9.basis(0));
  CHECK(d.one == Subspace::span(4, {j9.basis(0)}));
  CHECK(d.half == Subspace::span(4, {j9.basis(2), j9.basis(3)}));
  CHECK(d.zero == Subspace::span(4, {j9.basis(1)}));

  const Algebra& b1 = alg("B1");
  auto db = jordan::peirce_single(b1, b1.basis(0));
  CHECK(db.one.is_full());
  CHECK(db.half.is_zero());
  CHECK(db.zero.is_zero());

  Algebra u = jordan::unitalization(alg("J55"));
  CHECK(jordan::peirce_single(u, u.basis(4)).one.is_full());

  CHECK_THROWS_AS(jordan::peirce_single(j9, j9.basis(3)), jordan::PeirceError);
}

TEST_CASE("multi idempotent decompositions") {
  auto f5 = jordan::table_idempotent_frame(alg("J5"));
  CHECK(f5.unitalized);
  REQUIRE(f5.complement);
  auto m5 = jordan::peirce_multi(f5.algebra, f5.idempotents);
  auto at5 = m5.locate(f5.embed(alg("J5").basis(3)));
  REQUIRE(at5);
  CHECK(*at5 == std::make_pair(*f5.complement, *f5.complement));

  auto f7 = jordan::table_idempotent_frame(alg("J7"));
  CHECK_FALSE(f7.unitalized);
  auto m7 = jordan::peirce_multi(f7.algebra, f7.idempotents);
  auto at7 = m7.locate(f7.embed(alg("J7").basis(2)));
  REQUIRE(at7);
  CHECK(f7.names[at7->first] == "e1");
  CHECK(f7.names[at7->second] == "e2");

  const Algebra& j3 = alg("J3");
  std::vector<Element> es{j3.basis(0), j3.basis(1), j3.basis(2), j3.basis(3)};
  auto m3 = jordan::peirce_multi(j3, es);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i; j < 4; ++j)
      CHECK(m3.block(i, j) == (i == j ? Subspace::span(4, {j3.basis(i)}) : Subspace::zero(4)));
  CHECK(jordan::multi_rule_violations(j3, m3).empty());

  std::vector<Element> not_orthogonal{j3.basis(0), j3.basis(0) + j3.basis(1), j3.basis(2) + j3.basis(3)};
  CHECK_THROWS_AS(jordan::peirce_multi(j3, not_orthogonal), jordan::PeirceError);
}
