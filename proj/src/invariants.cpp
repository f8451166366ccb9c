#include "jordan/invariants.hpp"

#include <algorithm>

namespace jordan {

namespace {

std::size_t power_cap(const Algebra& a) { return std::max<std::size_t>(4, a.dim() + 1); }

}  // namespace

std::vector<Subspace> lower_central_series(const Algebra& a, std::size_t count) {
  std::vector<Subspace> series;
  if (count == 0) return series;
  const Subspace whole = Subspace::full(a.dim());
  series.push_back(whole);
  while (series.size() < count) {
    const Subspace& prev = series.back();
    if (prev.is_zero()) {
      series.push_back(prev);
      continue;
    }
    series.push_back(product_span(a, prev, whole));
  }
  return series;
}

std::vector<Subspace> associative_powers(const Algebra& a, std::size_t count) {
  std::vector<Subspace> powers;
  if (count == 0) return powers;
  powers.push_back(Subspace::full(a.dim()));
  for (std::size_t k = 2; k <= count; ++k) {
    Subspace acc(a.dim());
    // index i holds J^{i+1}
    for (std::size_t i = 1; i < k; ++i) {
      const Subspace& left = powers[k - i - 1];
      const Subspace& right = powers[i - 1];
      if (left.is_zero() || right.is_zero()) continue;
      acc = sum(acc, product_span(a, left, right));
    }
    powers.push_back(std::move(acc));
  }
  return powers;
}

PowerProfile power_profile(const Algebra& a) {
  const std::size_t cap = power_cap(a);
  PowerProfile p;
  for (const auto& s : associative_powers(a, cap)) p.assoc_powers.push_back(s.dim());
  auto lcs = lower_central_series(a, cap);
  for (std::size_t k = 0; k < lcs.size(); ++k) {
    p.lcs.push_back(lcs[k].dim());
    if (!p.nilindex && lcs[k].is_zero()) p.nilindex = k + 1;
  }
  return p;
}

bool is_nilpotent(const Algebra& a) { return power_profile(a).nilindex.has_value(); }

std::vector<std::size_t> nilpotency_type(const Algebra& a) {
  PowerProfile p = power_profile(a);
  if (!p.nilindex) throw NotNilpotentError("nilpotency_type: algebra is not nilpotent");
  std::vector<std::size_t> type;
  for (std::size_t i = 0; i + 1 < *p.nilindex; ++i) type.push_back(p.lcs[i] - p.lcs[i + 1]);
  return type;
}

Subspace annihilator(const Algebra& a) {
  const std::size_t n = a.dim();
  // x = sum x_i b_i with x*b_j = 0 and b_j*x = 0 for every j
  RowReducer rr(n);
  for (std::size_t j = 0; j < n && !rr.full(); ++j)
    for (std::size_t k = 0; k < n; ++k) {
      Vector left(n), right(n);
      for (std::size_t i = 0; i < n; ++i) {
        left[i] = a.coeff(i, j, k);
        right[i] = a.coeff(j, i, k);
      }
      rr.add(std::move(left));
      rr.add(std::move(right));
    }
  return rr.kernel();
}

bool is_ideal(const Algebra& a, const Subspace& s) {
  if (s.ambient() != a.dim()) throw DimensionError("is_ideal: ambient dimension mismatch");
  const Subspace whole = Subspace::full(a.dim());
  return s.contains(product_span(a, s, whole)) && s.contains(product_span(a, whole, s));
}

Matrix trace_form(const Algebra& a) {
  const std::size_t n = a.dim();
  Vector tr(n);  // tr L_{b_k}
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j) tr[k] += a.coeff(k, j, j);
  Matrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!tr[k].is_zero()) g(i, j) += a.coeff(i, j, k) * tr[k];
  return g;
}

std::size_t trace_rank(const Algebra& a) { return rank(trace_form(a)); }

Subspace radical(const Algebra& a) {
  if (auto v = find_jordan_violation(a))
    throw std::invalid_argument("radical: not a Jordan algebra (" + v->describe(a) + ")");
  Subspace rad = kernel(trace_form(a));
  if (!is_ideal(a, rad)) throw RadicalError("radical: trace-form kernel is not an ideal");
  if (!is_nilpotent(induced_algebra(a, rad)))
    throw RadicalError("radical: trace-form kernel is not nilpotent");
  Algebra q = quotient_algebra(a, rad);
  if (trace_rank(q) != q.dim()) throw RadicalError("radical: quotient trace form is degenerate");
  if (!find_identity(q)) throw RadicalError("radical: semisimple quotient has no identity");
  return rad;
}

Algebra quotient_algebra(const Algebra& a, const Subspace& ideal) {
  if (!is_ideal(a, ideal)) throw std::invalid_argument("quotient_algebra: subspace is not an ideal");
  const std::size_t n = a.dim();
  std::vector<bool> pivot(n, false);
  for (auto p : ideal.pivots()) pivot[p] = true;
  std::vector<std::size_t> keep;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    if (!pivot[i]) {
      keep.push_back(i);
      labels.push_back(a.label(i));
    }
  Algebra q(std::move(labels));
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = 0; j < keep.size(); ++j) {
      Vector r = ideal.reduce(a.basis_product(keep[i], keep[j]));
      Vector v(keep.size());
      for (std::size_t k = 0; k < keep.size(); ++k) v[k] = r[keep[k]];
      q.set_product(i, j, v, false);
    }
  return q;
}

std::array<std::size_t, 3> radical_module_type(const Algebra& a) {
  const std::size_t n = a.dim();
  Subspace rad = radical(a);
  Subspace m = product_span(a, rad, rad);
  for (Subspace grown = sum(m, product_span(a, Subspace::full(n), m)); grown != m;
       grown = sum(m, product_span(a, Subspace::full(n), m)))
    m = grown;

  std::vector<bool> pivot(n, false);
  for (auto p : rad.pivots()) pivot[p] = true;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < n; ++i)
    if (!pivot[i]) keep.push_back(i);
  Vector unit = find_identity(quotient_algebra(a, rad)).value();
  Element x(n);
  for (std::size_t k = 0; k < keep.size(); ++k) x[keep[k]] = unit[k];

  const std::array<Rational, 3> eigenvalues = {Rational(1), Rational(1, 2), Rational(0)};
  std::array<std::size_t, 3> dims{};
  for (std::size_t e = 0; e < 3; ++e) {
    std::vector<Vector> images;
    for (const auto& v : rad.basis()) images.push_back(m.reduce(a.multiply(x, v) - eigenvalues[e] * v));
    dims[e] = rad.dim() - Subspace::span(n, images).dim() - m.dim();
  }
  return dims;
}

std::size_t square_rank(const Algebra& a) {
  const std::size_t n = a.dim();
  auto lcs = lower_central_series(a, 3);
  std::vector<Vector> functionals = lcs[2].annihilator().basis();
  if (functionals.empty()) return 0;
  // every r x r minor is a polynomial of degree <= n(m-1) along t -> (1, t, t^2, ...)
  const std::size_t points = n * (functionals.size() - 1) + 1;
  std::size_t best = 0;
  for (std::size_t t = 0; t < points && best < n; ++t) {
    Vector w(n);
    Rational power(1);
    for (const auto& f : functionals) {
      axpy(w, power, f);
      power *= Rational(static_cast<long long>(t));
    }
    Matrix g(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Rational s;
        for (std::size_t k = 0; k < n; ++k)
          if (!a.coeff(i, j, k).is_zero()) s += w[k] * a.coeff(i, j, k);
        g(i, j) = s;
      }
    best = std::max(best, rank(g));
  }
  return best;
}

Subspace derivations(const Algebra& a) {
  const std::size_t n = a.dim();
  const bool comm = is_commutative(a);
  // unknown D(m, k) at index m * n + k, meaning D(b_k) has b_m-coefficient D(m, k)
  RowReducer rr(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = comm ? i : 0; j < n; ++j)
      for (std::size_t m = 0; m < n; ++m) {
        Vector row(n * n);
        for (std::size_t k = 0; k < n; ++k) {
          const Rational& c = a.coeff(i, j, k);
          if (!c.is_zero()) row[m * n + k] += c;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Rational& c1 = a.coeff(k, j, m);
          if (!c1.is_zero()) row[k * n + i] -= c1;
          const Rational& c2 = a.coeff(i, k, m);
          if (!c2.is_zero()) row[k * n + j] -= c2;
        }
        if (!is_zero(row)) rr.add(std::move(row));
        if (rr.full()) return rr.kernel();
      }
  return rr.kernel();
}

std::size_t derivation_dim(const Algebra& a) { return derivations(a).dim(); }

}  // namespace jordan
