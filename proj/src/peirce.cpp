#include "jordan/peirce.hpp"

#include <sstream>

#include "jordan/invariants.hpp"

namespace jordan {

namespace {

Subspace eigenspace(const Algebra& a, const Element& e, const Rational& lambda) {
  Matrix m = a.left_multiplication(e);
  for (std::size_t i = 0; i < a.dim(); ++i) m(i, i) -= lambda;
  return kernel(m);
}

void require_contained(std::vector<std::string>& out, const Algebra& a, const Subspace& x, const Subspace& y,
                       const Subspace& target, const std::string& rule) {
  if (x.is_zero() || y.is_zero()) return;
  if (!target.contains(product_span(a, x, y))) out.push_back(rule);
}

void require_zero(std::vector<std::string>& out, const Algebra& a, const Subspace& x, const Subspace& y,
                  const std::string& rule) {
  if (x.is_zero() || y.is_zero()) return;
  if (!product_span(a, x, y).is_zero()) out.push_back(rule);
}

std::string block_name(std::size_t i, std::size_t j) {
  return "J" + std::to_string(i) + std::to_string(j);
}

}  // namespace

bool is_idempotent(const Algebra& a, const Element& e) {
  return !is_zero(e) && a.multiply(e, e) == e;
}

std::vector<std::string> single_rule_violations(const Algebra& a, const SinglePeirce& d) {
  std::vector<std::string> v;
  require_contained(v, a, d.one, d.one, d.one, "J1*J1 in J1");
  require_zero(v, a, d.one, d.zero, "J1*J0 = 0");
  require_contained(v, a, d.zero, d.zero, d.zero, "J0*J0 in J0");
  require_contained(v, a, d.zero, d.half, d.half, "J0*J1/2 in J1/2");
  require_contained(v, a, d.one, d.half, d.half, "J1*J1/2 in J1/2");
  require_contained(v, a, d.half, d.half, sum(d.zero, d.one), "J1/2*J1/2 in J0+J1");
  return v;
}

SinglePeirce peirce_single(const Algebra& a, const Element& e) {
  if (e.size() != a.dim()) throw DimensionError("peirce_single: idempotent has wrong length");
  if (!is_idempotent(a, e))
    throw PeirceError("not an idempotent: e*e = " + to_string(a.multiply(e, e)) + " != e = " + to_string(e));
  if (!is_jordan(a)) throw std::invalid_argument("peirce_single: algebra is not Jordan");
  SinglePeirce d{e, eigenspace(a, e, 1), eigenspace(a, e, Rational(1, 2)), eigenspace(a, e, 0)};
  // Eigenspaces for distinct eigenvalues are independent, so a dimension
  // count decides whether L_e has any eigenvalue outside {0, 1/2, 1}.
  if (d.one.dim() + d.half.dim() + d.zero.dim() != a.dim())
    throw PeirceError("not a Jordan Peirce spectrum: eigenspace dimensions " + std::to_string(d.one.dim()) + "+" +
                      std::to_string(d.half.dim()) + "+" + std::to_string(d.zero.dim()) + " != " +
                      std::to_string(a.dim()));
  auto bad = single_rule_violations(a, d);
  if (!bad.empty()) throw PeirceError("Peirce rule violated: " + bad.front());
  return d;
}

std::optional<std::pair<std::size_t, std::size_t>> MultiPeirce::locate(const Vector& v) const {
  if (is_zero(v)) return std::nullopt;
  for (const auto& [key, s] : blocks)
    if (s.contains(v)) return key;
  return std::nullopt;
}

std::vector<std::string> multi_rule_violations(const Algebra& a, const MultiPeirce& d) {
  std::vector<std::string> v;
  const std::size_t m = d.idempotents.size();
  for (std::size_t i = 0; i < m; ++i) {
    require_contained(v, a, d.block(i, i), d.block(i, i), d.block(i, i),
                      block_name(i, i) + "^2 in " + block_name(i, i));
    for (std::size_t j = 0; j < m; ++j) {
      if (j == i) continue;
      const Subspace& ij = d.block(i, j);
      require_contained(v, a, ij, d.block(i, i), ij, block_name(i, j) + "*" + block_name(i, i) + " in " +
                                                        block_name(i, j));
      require_contained(v, a, ij, ij, sum(d.block(i, i), d.block(j, j)),
                        block_name(i, j) + "^2 in " + block_name(i, i) + "+" + block_name(j, j));
      require_zero(v, a, d.block(i, i), d.block(j, j), block_name(i, i) + "*" + block_name(j, j) + " = 0");
      for (std::size_t k = 0; k < m; ++k) {
        if (k == i || k == j) continue;
        require_contained(v, a, ij, d.block(j, k), d.block(i, k),
                          block_name(i, j) + "*" + block_name(j, k) + " in " + block_name(i, k));
        require_zero(v, a, d.block(i, i), d.block(j, k),
                     block_name(i, i) + "*" + block_name(j, k) + " = 0");
        for (std::size_t l = 0; l < m; ++l) {
          if (l == i || l == j || l == k) continue;
          require_zero(v, a, ij, d.block(k, l), block_name(i, j) + "*" + block_name(k, l) + " = 0");
        }
      }
    }
  }
  return v;
}

MultiPeirce peirce_multi(const Algebra& a, const std::vector<Element>& es) {
  const std::size_t n = a.dim();
  if (es.empty()) throw PeirceError("peirce_multi: empty idempotent family");
  for (const auto& e : es) {
    if (e.size() != n) throw DimensionError("peirce_multi: idempotent has wrong length");
    if (!is_idempotent(a, e)) throw PeirceError("peirce_multi: " + to_string(e) + " is not an idempotent");
  }
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = i + 1; j < es.size(); ++j)
      if (!is_zero(a.multiply(es[i], es[j])))
        throw PeirceError("peirce_multi: idempotents " + std::to_string(i) + " and " + std::to_string(j) +
                          " are not orthogonal");
  auto one = find_identity(a);
  if (!one) throw PeirceError("peirce_multi: algebra has no identity element");
  Element total(n);
  for (const auto& e : es) total = total + e;
  if (total != *one) throw PeirceError("peirce_multi: idempotents do not sum to the identity");

  MultiPeirce d;
  d.idempotents = es;
  std::vector<Subspace> ones, halves;
  for (const auto& e : es) {
    ones.push_back(eigenspace(a, e, 1));
    halves.push_back(eigenspace(a, e, Rational(1, 2)));
  }
  Subspace covered(n);
  std::size_t total_dim = 0;
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = i; j < es.size(); ++j) {
      Subspace s = (i == j) ? ones[i] : intersect(halves[i], halves[j]);
      total_dim += s.dim();
      covered = sum(covered, s);
      d.blocks.emplace(std::make_pair(i, j), std::move(s));
    }
  if (total_dim != n || !covered.is_full())
    throw PeirceError("peirce_multi: blocks do not decompose the space (total dimension " +
                      std::to_string(total_dim) + " of " + std::to_string(n) + ")");
  auto bad = multi_rule_violations(a, d);
  if (!bad.empty()) throw PeirceError("Peirce rule violated: " + bad.front());
  return d;
}

Element IdempotentFrame::embed(const Element& x) const {
  Element y = x;
  if (unitalized) y.push_back(0);
  return y;
}

IdempotentFrame table_idempotent_frame(const Algebra& a) {
  IdempotentFrame f;
  f.unitalized = !find_identity(a).has_value();
  f.algebra = f.unitalized ? unitalization(a) : a;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Element b = a.basis(i);
    if (a.multiply(b, b) == b) {
      f.idempotents.push_back(f.embed(b));
      f.names.push_back(a.label(i));
    }
  }
  Element rest = *find_identity(f.algebra);
  for (const auto& e : f.idempotents) rest = rest - e;
  if (!is_zero(rest)) {
    f.complement = f.idempotents.size();
    f.idempotents.push_back(rest);
    f.names.push_back("e0");
  }
  return f;
}

}  // namespace jordan
