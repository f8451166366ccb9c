#ifndef JORDAN_GROEBNER_HPP
#define JORDAN_GROEBNER_HPP

#include <string>
#include <vector>

#include "jordan/polynomial.hpp"

namespace jordan {

struct GroebnerOptions {
  std::size_t max_pairs = 10000;
  std::size_t max_coefficient_bits = 4096;
};

struct GroebnerResult {
  enum class Status { Complete, Exhausted };
  Status status = Status::Complete;
  /// Reduced monic basis when Complete; {1} when the ideal is trivial.
  std::vector<Polynomial> basis;
  std::size_t pairs_reduced = 0;
  std::string reason;

  bool complete() const { return status == Status::Complete; }
  bool trivial() const { return complete() && basis.size() == 1 && basis[0].is_constant(); }
};

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);
/// Full reduction of p by the (monic) divisors in g.
Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& g);

/// Buchberger in degrevlex with the product and chain criteria. Stops early
/// with basis {1} as soon as a nonzero constant appears.
GroebnerResult buchberger(const PolySystem& system, const GroebnerOptions& opts = {});

enum class Solvability { Yes, No, Inconclusive };
const char* to_string(Solvability s);

/// Complex solvability: No iff the reduced basis is {1}.
Solvability has_solution(const PolySystem& system, const GroebnerOptions& opts = {});

}  // namespace jordan

#endif
