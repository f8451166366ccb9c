#include <doctest.h>

#include <atomic>
#include <map>
#include <mutex>

#include "jordan/cohomology.hpp"
#include "jordan/embed.hpp"
#include "jordan/fingerprint.hpp"
#include "jordan/groebner.hpp"
#include "jordan/parallel.hpp"
#include "jordan/peirce.hpp"
#include "support.hpp"

using jordan::Algebra;
using jordan::Element;
using jordan::Subspace;
using testing::alg;

namespace {

std::vector<std::string> names() {
  std::vector<std::string> out;
  for (const auto& e : testing::catalog().entries()) out.push_back(e.name);
  return out;
}

std::vector<std::size_t> table_idempotents(const Algebra& a) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (a.basis_product(i, i) == a.basis(i)) out.push_back(i);
  return out;
}

class Failures {
public:
  void add(std::string s) {
    std::lock_guard lock(m_);
    list_.push_back(std::move(s));
  }
  const std::vector<std::string>& list() const { return list_; }

private:
  std::mutex m_;
  std::vector<std::string> list_;
};

}  // namespace

TEST_CASE("Jordan identity at random elements") {
  testing::Gen g(101);
  for (const auto& name : names()) {
    const Algebra& a = alg(name);
    for (int t = 0; t < 200; ++t) {
      Element x = g.element(a.dim()), y = g.element(a.dim());
      Element x2 = a.multiply(x, x);
      INFO(name);
      CHECK(a.multiply(a.multiply(x2, y), x) == a.multiply(x2, a.multiply(y, x)));
    }
  }
}

TEST_CASE("radical postconditions") {
  for (const auto& name : names()) {
    const Algebra& a = alg(name);
    INFO(name);
    Subspace rad = jordan::radical(a);
    CHECK(jordan::is_ideal(a, rad));
    CHECK(jordan::is_nilpotent(jordan::induced_algebra(a, rad)));
    Algebra q = jordan::quotient_algebra(a, rad);
    CHECK(rad.dim() + q.dim() == a.dim());
    CHECK(jordan::find_identity(q).has_value());
    CHECK(jordan::trace_rank(q) == q.dim());
  }
}

TEST_CASE("fingerprint invariance under random basis changes") {
  auto all = names();
  std::vector<std::pair<std::string, jordan::Matrix>> jobs;
  testing::Gen g(102);
  for (const auto& name : all)
    for (int t = 0; t < 20; ++t) jobs.emplace_back(name, g.invertible(alg(name).dim()));
  std::vector<jordan::Fingerprint> base(all.size());
  jordan::parallel_for(all.size(), [&](std::size_t i) { base[i] = jordan::fingerprint(alg(all[i])); });
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < all.size(); ++i) index[all[i]] = i;

  Failures failures;
  jordan::parallel_for(jobs.size(), [&](std::size_t k) {
    const auto& [name, p] = jobs[k];
    Algebra b = jordan::change_basis(alg(name), p);
    jordan::Fingerprint f = jordan::fingerprint(b);
    if (f != base[index[name]]) failures.add(name + ": " + to_string(f));
  });
  CHECK(jobs.size() == 20 * all.size());
  for (const auto& f : failures.list()) FAIL_CHECK(f);
}

TEST_CASE("B2 embedding is invariant under basis changes") {
  testing::Gen g(103);
  for (const char* name : {"J55", "J56", "B2"}) {
    auto base = jordan::embeds_b2(alg(name)).answer;
    for (int t = 0; t < 3; ++t) {
      Algebra b = jordan::change_basis(alg(name), g.invertible(alg(name).dim(), 1));
      auto r = jordan::embeds_b2(b);
      INFO(name);
      CHECK(r.answer == base);
      if (r.witness) CHECK(jordan::is_b2_witness(b, r.witness->e, r.witness->y));
    }
  }
}

TEST_CASE("Peirce decompositions of table idempotents") {
  std::size_t checked = 0;
  for (const auto& name : names()) {
    const Algebra& a = alg(name);
    INFO(name);
    for (auto i : table_idempotents(a)) {
      auto d = jordan::peirce_single(a, a.basis(i));
      CHECK(d.one.dim() + d.half.dim() + d.zero.dim() == a.dim());
      CHECK(jordan::sum(jordan::sum(d.one, d.half), d.zero).is_full());
      CHECK(jordan::single_rule_violations(a, d).empty());
      for (const auto& v : d.half.basis()) CHECK(a.multiply(a.basis(i), v) == jordan::Rational(1, 2) * v);
      ++checked;
    }
    auto frame = jordan::table_idempotent_frame(a);
    if (frame.idempotents.empty()) continue;
    auto m = jordan::peirce_multi(frame.algebra, frame.idempotents);
    Subspace total = Subspace::zero(frame.algebra.dim());
    std::size_t dims = 0;
    for (const auto& [key, block] : m.blocks) {
      total = jordan::sum(total, block);
      dims += block.dim();
    }
    CHECK(total.is_full());
    CHECK(dims == frame.algebra.dim());
    CHECK(jordan::multi_rule_violations(frame.algebra, m).empty());
  }
  CHECK(checked >= 100);
}

TEST_CASE("Peirce decompositions along an idempotent family") {
  testing::Gen g(104);
  const Algebra& j55 = alg("J55");
  for (int t = 0; t < 20; ++t) {
    jordan::Rational c = g.rational(7);
    Element e = j55.basis(0);
    e[2] = -(c * c);
    e[3] = c;
    REQUIRE(jordan::is_idempotent(j55, e));
    auto d = jordan::peirce_single(j55, e);
    CHECK(jordan::single_rule_violations(j55, d).empty());
    CHECK(d.one.dim() + d.half.dim() + d.zero.dim() == 4);
  }
}

TEST_CASE("radical Peirce components of dimension one") {
  std::size_t applicable = 0;
  for (const auto& name : names()) {
    const Algebra& a = alg(name);
    Subspace rad = jordan::radical(a);
    for (auto i : table_idempotents(a)) {
      auto d = jordan::peirce_single(a, a.basis(i));
      Subspace n1 = jordan::intersect(rad, d.one), nh = jordan::intersect(rad, d.half),
               n0 = jordan::intersect(rad, d.zero);
      INFO(name << " e=" << a.label(i));
      for (const Subspace* ni : {&n0, &n1}) {
        if (ni->dim() == 1) {
          CHECK(jordan::product_span(a, *ni, *ni).is_zero());
          ++applicable;
        }
        if (nh.dim() == 1) {
          CHECK(jordan::product_span(a, *ni, nh).is_zero());
          ++applicable;
        }
      }
    }
  }
  CHECK(applicable > 50);
}

TEST_CASE("S-polynomials of computed bases reduce to zero") {
  auto all = names();
  Failures failures;
  std::atomic<std::size_t> complete{0};
  jordan::parallel_for(all.size(), [&](std::size_t k) {
    const Algebra& a = alg(all[k]);
    auto system = jordan::b2_system(a);
    auto r = jordan::buchberger(system);
    if (!r.complete()) return;
    ++complete;
    for (std::size_t i = 0; i < r.basis.size(); ++i)
      for (std::size_t j = i + 1; j < r.basis.size(); ++j)
        if (!jordan::normal_form(jordan::s_polynomial(r.basis[i], r.basis[j]), r.basis).is_zero())
          failures.add(all[k] + ": S(" + std::to_string(i) + "," + std::to_string(j) + ")");
    for (const auto& p : system.polynomials)
      if (!jordan::normal_form(p, r.basis).is_zero()) failures.add(all[k] + ": generator not reduced");
  });
  CHECK(complete == all.size());
  for (const auto& f : failures.list()) FAIL_CHECK(f);
}

TEST_CASE("coboundaries are cocycles") {
  for (const auto& name : names()) {
    auto cs = jordan::cocycle_space(alg(name));
    INFO(name);
    CHECK(cs.cocycles.contains(cs.coboundaries));
    CHECK(cs.h2_dim == cs.z2_dim - cs.b2_dim);
  }
}

TEST_CASE("null extensions by random coboundaries are Jordan") {
  testing::Gen g(105);
  auto all = names();
  std::vector<jordan::Matrix> mus;
  for (const auto& name : all)
    for (int t = 0; t < 10; ++t) mus.push_back(g.matrix(alg(name).dim(), alg(name).dim(), 3));
  Failures failures;
  jordan::parallel_for(mus.size(), [&](std::size_t k) {
    const Algebra& a = alg(all[k / 10]);
    if (!jordan::is_jordan(jordan::null_extension(a, jordan::coboundary(a, mus[k])))) failures.add(all[k / 10]);
  });
  for (const auto& f : failures.list()) FAIL_CHECK(f);
}

TEST_CASE("catalog text round trip after basis change") {
  testing::Gen g(106);
  for (const auto& name : names()) {
    Algebra b = jordan::change_basis(alg(name), g.invertible(alg(name).dim()));
    auto back = jordan::parse_catalog(jordan::serialize(name, b));
    REQUIRE(back.size() == 1);
    CHECK(jordan::resolve(back[0], {}) == b);
  }
}
