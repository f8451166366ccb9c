#include "jordan/groebner.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace jordan {

namespace {

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

const Polynomial* find_divisor(const Monomial& m, const std::vector<const Polynomial*>& g) {
  for (const auto* p : g)
    if (p->leading_monomial().divides(m)) return p;
  return nullptr;
}

Polynomial reduce(Polynomial p, const std::vector<const Polynomial*>& g) {
  Polynomial rest;
  while (!p.is_zero()) {
    const Term lt = p.terms().front();
    if (const Polynomial* d = find_divisor(lt.monomial, g)) {
      Rational c = lt.coeff / d->leading_coeff();
      p = p.minus_scaled(c, lt.monomial / d->leading_monomial(), *d);
    } else {
      rest = rest + Polynomial::term(lt.coeff, lt.monomial);
      p = p - Polynomial::term(lt.coeff, lt.monomial);
    }
  }
  return rest;
}

std::vector<Polynomial> one() { return {Polynomial::constant(1)}; }

std::vector<Polynomial> reduce_basis(const std::vector<Polynomial>& g) {
  std::vector<Polynomial> kept;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial& a = g[j].leading_monomial();
      const Monomial& b = g[i].leading_monomial();
      if (a.divides(b) && (!(a == b) || j < i)) redundant = true;
    }
    if (!redundant) kept.push_back(g[i]);
  }
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    std::vector<const Polynomial*> others;
    for (std::size_t j = 0; j < kept.size(); ++j)
      if (j != i) others.push_back(&kept[j]);
    Term lt = kept[i].terms().front();
    Polynomial tail = kept[i] - Polynomial::term(lt.coeff, lt.monomial);
    out.push_back((Polynomial::term(lt.coeff, lt.monomial) + reduce(tail, others)).monic());
  }
  std::sort(out.begin(), out.end(), [](const Polynomial& a, const Polynomial& b) {
    return a.leading_monomial() < b.leading_monomial();
  });
  return out;
}

}  // namespace

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  Monomial l = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
  Polynomial a = f.scaled(f.leading_coeff().inverse(), l / f.leading_monomial());
  return a.minus_scaled(g.leading_coeff().inverse(), l / g.leading_monomial(), g);
}

Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& g) {
  std::vector<const Polynomial*> ptrs;
  for (const auto& q : g)
    if (!q.is_zero()) ptrs.push_back(&q);
  return reduce(p, ptrs);
}

GroebnerResult buchberger(const PolySystem& system, const GroebnerOptions& opts) {
  GroebnerResult res;
  std::vector<Polynomial> g;
  std::vector<Pair> pending;
  std::set<std::pair<std::size_t, std::size_t>> open;

  auto add = [&](Polynomial p) -> bool {
    p = p.monic();
    if (p.is_constant()) return false;
    std::size_t k = g.size();
    g.push_back(std::move(p));
    for (std::size_t i = 0; i < k; ++i) {
      pending.push_back({i, k, Monomial::lcm(g[i].leading_monomial(), g[k].leading_monomial())});
      open.emplace(i, k);
    }
    return true;
  };
  auto pointers = [&]() {
    std::vector<const Polynomial*> v;
    for (const auto& q : g) v.push_back(&q);
    return v;
  };

  for (const auto& p : system.polynomials) {
    Polynomial r = reduce(p, pointers());
    if (r.is_zero()) continue;
    if (!add(r)) {
      res.basis = one();
      return res;
    }
  }

  while (!pending.empty()) {
    auto it = std::min_element(pending.begin(), pending.end(), [](const Pair& a, const Pair& b) {
      if (!(a.lcm == b.lcm)) return a.lcm < b.lcm;
      return std::pair(a.j, a.i) < std::pair(b.j, b.i);
    });
    Pair pr = *it;
    pending.erase(it);
    open.erase({pr.i, pr.j});

    const Monomial& li = g[pr.i].leading_monomial();
    const Monomial& lj = g[pr.j].leading_monomial();
    if (li.coprime(lj)) continue;
    bool chain = false;
    for (std::size_t k = 0; k < g.size() && !chain; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (!g[k].leading_monomial().divides(pr.lcm)) continue;
      if (!open.count(std::minmax(pr.i, k)) && !open.count(std::minmax(pr.j, k))) chain = true;
    }
    if (chain) continue;

    if (res.pairs_reduced >= opts.max_pairs) {
      res.status = GroebnerResult::Status::Exhausted;
      res.reason = "S-pair budget of " + std::to_string(opts.max_pairs) + " exhausted";
      res.basis = g;
      return res;
    }
    ++res.pairs_reduced;
    Polynomial r = reduce(s_polynomial(g[pr.i], g[pr.j]), pointers());
    if (r.is_zero()) continue;
    if (r.max_coefficient_bits() > opts.max_coefficient_bits) {
      res.status = GroebnerResult::Status::Exhausted;
      res.reason = "coefficient size exceeded " + std::to_string(opts.max_coefficient_bits) + " bits";
      res.basis = g;
      return res;
    }
    if (!add(r)) {
      res.basis = one();
      return res;
    }
  }
  res.basis = reduce_basis(g);
  return res;
}

const char* to_string(Solvability s) {
  switch (s) {
    case Solvability::Yes: return "yes";
    case Solvability::No: return "no";
    case Solvability::Inconclusive: return "inconclusive";
  }
  return "?";
}

Solvability has_solution(const PolySystem& system, const GroebnerOptions& opts) {
  GroebnerResult r = buchberger(system, opts);
  if (!r.complete()) return Solvability::Inconclusive;
  return r.trivial() ? Solvability::No : Solvability::Yes;
}

}  // namespace jordan
